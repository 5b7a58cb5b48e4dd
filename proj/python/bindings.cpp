#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "supercong/sweep.hpp"

namespace py = pybind11;
using namespace supercong;

namespace {

py::int_ to_pyint(const Int& n) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(n.get_str().c_str(), nullptr, 10));
}

py::list to_pylist(const std::vector<Int>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_pyint(x));
    return out;
}

Rat rat_arg(const std::string& s) { return parse_rat(s); }

SeqTag tag_arg(const std::string& name) {
    if (name == "domb") return SeqTag::domb;
    if (name == "az") return SeqTag::az;
    if (name == "w") return SeqTag::w;
    throw DomainError("unknown sequence: " + name);
}

SeqFormula formula_arg(const std::string& name) {
    if (name == "definition") return SeqFormula::definition;
    if (name == "reduced") return SeqFormula::reduced;
    if (name == "reduced-alt" || name == "reduced_alt") return SeqFormula::reduced_alt;
    throw DomainError("unknown formula variant: " + name);
}

Normalization norm_arg(const std::string& name) {
    if (name == "positive") return Normalization::positive;
    if (name == "x_mod4_1") return Normalization::x_mod4_1;
    if (name == "L_mod3_1") return Normalization::L_mod3_1;
    if (name == "x_mod3_1") return Normalization::x_mod3_1;
    if (name == "AB_pair") return Normalization::AB_pair;
    throw DomainError("unknown normalization: " + name);
}

py::dict result_dict(const CheckResult& r) {
    py::dict d;
    d["case"] = r.case_id;
    d["p"] = r.p;
    d["modulus"] = r.modulus;
    d["lhs"] = to_pyint(r.lhs);
    d["rhs"] = to_pyint(r.rhs);
    d["verdict"] = verdict_name(r.verdict);
    if (!r.reason.empty()) d["reason"] = r.reason;
    if (!r.params.empty()) d["params"] = r.params;
    if (!r.probe.empty()) d["probe"] = r.probe;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact truncated p-adic arithmetic and super-congruence checks";

    py::register_exception<Error>(m, "SupercongError");

    py::class_<PadicNum>(m, "PadicNum")
        .def_property_readonly("prime", &PadicNum::prime)
        .def_property_readonly("is_zero",
                               [](const PadicNum& x) { return x.is_zero_like(); })
        .def_property_readonly("valuation",
                               [](const PadicNum& x) { return x.valuation(); })
        .def_property_readonly("unit", [](const PadicNum& x) { return to_pyint(x.unit()); })
        .def_property_readonly("precision", &PadicNum::precision)
        .def("to_residue", [](const PadicNum& x, int m) { return to_pyint(x.to_residue(m)); })
        .def("__add__", [](const PadicNum& a, const PadicNum& b) { return add(a, b); })
        .def("__sub__", [](const PadicNum& a, const PadicNum& b) { return a - b; })
        .def("__mul__", [](const PadicNum& a, const PadicNum& b) { return mul(a, b); })
        .def("__truediv__", [](const PadicNum& a, const PadicNum& b) { return div(a, b); })
        .def("__neg__", [](const PadicNum& a) { return neg(a); })
        .def("__eq__", [](const PadicNum& a, const PadicNum& b) { return a == b; })
        .def("__repr__", [](const PadicNum& x) { return x.str(); });

    m.def(
        "from_rational",
        [](const std::string& r, long p, int prec) {
            return PadicNum::from_rational(rat_arg(r), p, prec);
        },
        py::arg("r"), py::arg("p"), py::arg("prec"),
        "p-adic value of a rational given as 'n' or 'n/d'");
    m.def("pow_residue", [](long a, long e, long p, int m) {
        return to_pyint(pow_residue(a, e, p, m));
    });

    m.def("angle", [](const std::string& a, long p) {
        auto d = angle(rat_arg(a), p);
        return py::make_tuple(d.angle, rat_str(d.cofactor));
    });
    m.def("gen_binom", [](const std::string& a, long k, long p, int prec) {
        return gen_binom(rat_arg(a), k, p, prec);
    });
    m.def("harmonic", [](long n, long p, int m) { return to_pyint(harmonic(n, p, m)); });
    m.def("fermat_quotient", [](long a, long p) { return to_pyint(fermat_quotient(a, p)); });
    m.def("legendre", [](long a, long p) { return legendre(a, p); });
    m.def("u_sequence", [](long n) { return to_pylist(u_sequence(n)); });

    m.def(
        "sequence_exact",
        [](const std::string& tag, long n, const std::string& formula) {
            return to_pylist(sequence_exact(tag_arg(tag), formula_arg(formula), n));
        },
        py::arg("tag"), py::arg("n_max"), py::arg("formula") = "definition");
    m.def("sequence_mod", [](const std::string& tag, long n, long p, int m) {
        return to_pylist(sequence_mod(tag_arg(tag), n, p, m));
    });

    m.def(
        "represent",
        [](long p, int multiplier, int d, const std::string& norm) {
            QuadRep r = represent(p, {multiplier, d, norm_arg(norm)});
            return py::make_tuple(r.x, r.y);
        },
        py::arg("p"), py::arg("multiplier"), py::arg("d"), py::arg("norm") = "positive");
    m.def("c_value", &c_value);

    m.def("registry_ids", [] {
        std::vector<std::string> ids;
        for (const auto& c : registry()) ids.push_back(c.id);
        return ids;
    });
    m.def("registry_info", [] {
        py::list out;
        for (const auto& c : registry()) {
            py::dict d;
            d["id"] = c.id;
            d["status"] = status_name(c.status);
            d["modulus"] = c.modulus;
            d["condition"] = c.condition;
            d["citation"] = c.citation;
            d["parameterized"] = c.parameterized;
            out.append(d);
        }
        return out;
    });

    m.def(
        "evaluate",
        [](const std::string& id, long p, int draws, int guard, uint64_t seed) {
            const CongruenceCase* c = find_case(id);
            if (!c) throw DomainError("unknown case id: " + id);
            EvalOptions opt;
            opt.draws = draws;
            opt.guard = guard;
            opt.seed = seed;
            return result_dict(evaluate(*c, p, opt));
        },
        py::arg("case_id"), py::arg("p"), py::arg("draws") = 10, py::arg("guard") = 3,
        py::arg("seed") = 1);

    m.def(
        "verify",
        [](long pmin, long pmax, const std::vector<std::string>& ids, int draws, int workers,
           uint64_t seed) {
            SweepConfig cfg;
            cfg.pmin = pmin;
            cfg.pmax = pmax;
            cfg.ids = ids;
            cfg.draws = draws;
            cfg.workers = workers;
            cfg.seed = seed;
            cfg.sorted = true;
            SweepReport rep = run_sweep(cfg);
            py::list out;
            for (const auto& r : rep.records) out.append(result_dict(r));
            return out;
        },
        py::arg("pmin"), py::arg("pmax"), py::arg("ids") = std::vector<std::string>{},
        py::arg("draws") = 10, py::arg("workers") = 1, py::arg("seed") = 1);
}
