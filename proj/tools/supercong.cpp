#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <regex>

#include "supercong/sweep.hpp"

using namespace supercong;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string balanced(const Int& r, long p, int m) {
    const Int& pm = pow_p(p, m);
    Int b = r;
    if (2 * b > pm) b -= pm;
    return b.get_str();
}

std::string mod_display(const CongruenceCase& c) {
    if (c.modulus_override) return "p^2|p";
    return "p^" + std::to_string(c.modulus);
}

int cmd_list(const std::vector<std::string>& ids, const std::string& status) {
    SweepConfig cfg;
    cfg.ids = ids;
    if (!status.empty()) {
        if (status == "theorem") cfg.status_filter = Status::theorem;
        else if (status == "lemma") cfg.status_filter = Status::lemma;
        else if (status == "conjecture") cfg.status_filter = Status::conjecture;
        else {
            std::cerr << "unknown status: " << status << "\n";
            return 64;
        }
    }
    auto cases = select_cases(cfg);
    if (!ids.empty() && cases.size() != ids.size()) {
        for (const auto& id : ids)
            if (!find_case(id)) {
                std::cerr << "unknown case id: " << id << "\n";
                return 64;
            }
    }
    for (const auto* c : cases) {
        std::cout << std::left << std::setw(12) << c->id << std::setw(7) << mod_display(*c)
                  << std::setw(12) << status_name(c->status) << std::setw(26) << c->citation
                  << c->condition << "\n";
    }
    return 0;
}

void print_text(const CheckResult& r, const CongruenceCase& c) {
    std::ostream& os = std::cout;
    if (r.verdict == CheckResult::Verdict::fail && c.status == Status::conjecture &&
        !r.exploratory)
        os << "COUNTEREXAMPLE ";
    os << r.case_id << " p=" << r.p << " mod p^" << r.modulus << ":";
    if (r.verdict == CheckResult::Verdict::skipped) {
        os << " skipped (" << r.reason << ")";
    } else {
        os << " lhs=" << r.lhs.get_str() << " (" << balanced(r.lhs, r.p, r.modulus) << ")"
           << " rhs=" << r.rhs.get_str() << " (" << balanced(r.rhs, r.p, r.modulus) << ") "
           << verdict_name(r.verdict);
    }
    if (!r.params.empty()) os << " [" << r.params << "]";
    if (r.exploratory) os << " [exploratory]";
    if (!r.probe.empty()) os << " [" << r.probe << "]";
    os << "\n";
}

void print_json(const CheckResult& r, uint64_t seed) {
    ordered_json j;
    j["case"] = r.case_id;
    j["p"] = r.p;
    j["modulus"] = r.modulus;
    j["lhs"] = r.lhs.get_str();
    j["rhs"] = r.rhs.get_str();
    j["verdict"] = verdict_name(r.verdict);
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (!r.params.empty()) j["params"] = r.params;
    if (r.draws > 1) j["draws"] = r.draws;
    if (!r.probe.empty()) j["probe"] = r.probe;
    if (r.exploratory) j["exploratory"] = true;
    j["seed"] = seed;
    std::cout << j.dump() << "\n";
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    return out + "\"";
}

void print_csv(const CheckResult& r, uint64_t seed) {
    std::cout << r.case_id << "," << r.p << "," << r.modulus << "," << r.lhs.get_str() << ","
              << r.rhs.get_str() << "," << verdict_name(r.verdict) << "," << csv_quote(r.reason)
              << "," << csv_quote(r.params) << "," << seed << "\n";
}

int cmd_verify(const SweepConfig& cfg, const std::string& format) {
    for (const auto& id : cfg.ids)
        if (!find_case(id)) {
            std::cerr << "unknown case id: " << id << "\n";
            return 64;
        }
    SweepReport rep = run_sweep(cfg);
    if (format == "csv") std::cout << "case,p,modulus,lhs,rhs,verdict,reason,params,seed\n";
    for (const auto& r : rep.records) {
        if (format == "json") print_json(r, cfg.seed);
        else if (format == "csv") print_csv(r, cfg.seed);
        else print_text(r, *find_case(r.case_id));
    }
    if (format == "text") {
        std::cout << rep.records.size() << " records: " << rep.passes << " pass, " << rep.fails
                  << " fail, " << rep.skips << " skipped\n";
    }
    return report_exit_code(rep);
}

int cmd_sequence(const std::string& name, long n_max, long p, int m, const std::string& formula) {
    SeqFormula f = SeqFormula::definition;
    if (formula == "reduced") f = SeqFormula::reduced;
    else if (formula == "reduced-alt") f = SeqFormula::reduced_alt;
    else if (formula != "definition") {
        std::cerr << "unknown formula variant: " << formula << "\n";
        return 64;
    }
    std::vector<Int> vals;
    if (name == "u") {
        vals = u_sequence(n_max);
    } else {
        SeqTag tag;
        if (name == "domb") tag = SeqTag::domb;
        else if (name == "az") tag = SeqTag::az;
        else if (name == "w") tag = SeqTag::w;
        else {
            std::cerr << "unknown sequence: " << name << " (want domb|az|w|u)\n";
            return 64;
        }
        vals = sequence_exact(tag, f, n_max);
    }
    if (p > 0) {
        const Int& pm = pow_p(p, m);
        for (auto& v : vals) {
            v %= pm;
            if (v < 0) v += pm;
        }
    }
    for (size_t i = 0; i < vals.size(); ++i) std::cout << (i ? " " : "") << vals[i].get_str();
    std::cout << "\n";
    return 0;
}

int cmd_represent(long p, const std::string& form) {
    static const std::regex rx(
        R"(^\s*(\d*)\s*p\s*=\s*([A-Za-z])\^2\s*\+\s*(\d*)\s*([A-Za-z])\^2\s*$)");
    std::smatch mt;
    if (!std::regex_match(form, mt, rx)) {
        std::cerr << "cannot parse form: " << form << " (expected like \"p=x^2+3y^2\")\n";
        return 64;
    }
    int mult = mt[1].str().empty() ? 1 : std::stoi(mt[1].str());
    std::string xn = mt[2].str(), yn = mt[4].str();
    int d = mt[3].str().empty() ? 1 : std::stoi(mt[3].str());
    Normalization norm;
    switch (d) {
        case 1: norm = Normalization::x_mod4_1; break;
        case 9: norm = Normalization::x_mod3_1; break;
        case 27: norm = Normalization::L_mod3_1; break;
        default: norm = Normalization::positive; break;
    }
    try {
        QuadRep r = represent(p, {mult, d, norm});
        std::cout << xn << "=" << r.x << " " << yn << "=" << r.y;
        if (mult == 1) std::cout << " 4" << xn << "^2-2p=" << 4 * r.x * r.x - 2 * p;
        else if (mult == 2) std::cout << " 2p-2" << xn << "^2=" << 2 * p - 2 * r.x * r.x;
        std::cout << "\n";
        return 0;
    } catch (const NotRepresentable& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifier for binomial-sum and Apery-like super congruences"};
    app.require_subcommand(1);

    // list
    auto* list = app.add_subcommand("list", "print the congruence registry");
    std::vector<std::string> list_ids;
    std::string list_status;
    list->add_option("--id", list_ids, "restrict to these case ids")->take_all();
    list->add_option("--status", list_status, "theorem|lemma|conjecture");

    // verify
    auto* verify = app.add_subcommand("verify", "sweep primes and check congruences");
    SweepConfig cfg;
    std::string format = "text", v_status;
    long seed_opt = -1;
    int mod_exp = 0;
    verify->add_option("--id", cfg.ids, "case ids to verify (default: all)")->take_all();
    verify->add_option("--status", v_status, "restrict to theorem|lemma|conjecture");
    verify->add_option("--pmin", cfg.pmin, "smallest prime (> 3)");
    verify->add_option("--pmax", cfg.pmax, "largest prime");
    verify->add_option("--mod-exp", mod_exp, "override modulus exponent (raising = exploratory)");
    verify->add_option("--guard", cfg.guard, "working-precision guard digits")->check(CLI::Range(1, 24));
    verify->add_option("--seed", seed_opt, "seed for parameter sampling");
    verify->add_option("--draws", cfg.draws, "parameter draws per prime")->check(CLI::Range(1, 10000));
    verify->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--workers", cfg.workers, "worker threads")->check(CLI::Range(1, 256));
    verify->add_flag("--sort", cfg.sorted, "order records by (case, p)");

    // sequence
    auto* seq = app.add_subcommand("sequence", "dump sequence values");
    std::string seq_name, seq_formula = "definition";
    long seq_n = 0, seq_p = 0;
    int seq_m = 1;
    seq->add_option("name", seq_name, "domb|az|w|u")->required();
    seq->add_option("n_max", seq_n, "last index")->required()->check(CLI::NonNegativeNumber);
    seq->add_option("--p", seq_p, "reduce mod p^m");
    seq->add_option("--m", seq_m, "modulus exponent")->check(CLI::Range(1, 24));
    seq->add_option("--formula", seq_formula, "definition|reduced|reduced-alt");

    // represent
    auto* rep = app.add_subcommand("represent", "solve a quadratic-form representation");
    long rep_p = 0;
    std::string rep_form;
    rep->add_option("p", rep_p, "odd prime")->required();
    rep->add_option("form", rep_form, "e.g. \"p=x^2+3y^2\" or \"4p=L^2+27M^2\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (list->parsed()) return cmd_list(list_ids, list_status);
        if (verify->parsed()) {
            if (cfg.pmin <= 3 || cfg.pmax < cfg.pmin) {
                std::cerr << "invalid prime range: need 3 < pmin <= pmax\n";
                return 64;
            }
            if (!v_status.empty()) {
                if (v_status == "theorem") cfg.status_filter = Status::theorem;
                else if (v_status == "lemma") cfg.status_filter = Status::lemma;
                else if (v_status == "conjecture") cfg.status_filter = Status::conjecture;
                else {
                    std::cerr << "unknown status: " << v_status << "\n";
                    return 64;
                }
            }
            if (mod_exp != 0) {
                if (mod_exp < 1 || mod_exp > 6) {
                    std::cerr << "mod-exp out of range\n";
                    return 64;
                }
                cfg.mod_exp = mod_exp;
            }
            if (seed_opt >= 0) {
                cfg.seed = static_cast<uint64_t>(seed_opt);
            } else if (const char* env = std::getenv("SUPERCONG_SEED")) {
                cfg.seed = std::strtoull(env, nullptr, 10);
            }
            return cmd_verify(cfg, format);
        }
        if (seq->parsed()) {
            if (seq_p != 0 && (seq_p < 3 || primes_in(seq_p, seq_p).empty())) {
                std::cerr << "--p must be an odd prime\n";
                return 64;
            }
            return cmd_sequence(seq_name, seq_n, seq_p, seq_m, seq_formula);
        }
        if (rep->parsed()) return cmd_represent(rep_p, rep_form);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
