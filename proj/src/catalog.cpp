#include "supercong/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace supercong {

const char* status_name(Status s) {
    switch (s) {
        case Status::theorem: return "theorem";
        case Status::lemma: return "lemma";
        case Status::conjecture: return "conjecture";
    }
    return "?";
}

const char* verdict_name(CheckResult::Verdict v) {
    switch (v) {
        case CheckResult::Verdict::pass: return "pass";
        case CheckResult::Verdict::fail: return "fail";
        case CheckResult::Verdict::skipped: return "skipped";
    }
    return "?";
}

const Rat& Params::get(const std::string& name) const {
    for (const auto& [n, r] : v)
        if (n == name) return r;
    throw DomainError("no parameter " + name);
}

std::string Params::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ";";
        os << v[i].first << "=" << rat_str(v[i].second);
    }
    return os.str();
}

int CongruenceCase::modulus_for(long p) const {
    return modulus_override ? modulus_override(p) : modulus;
}

std::string CongruenceCase::applicable(long p) const {
    if (p <= 3) return "p <= 3";
    if (p == exclude_p) return "excluded prime (rhs not p-integral)";
    if (residue_ok && !residue_ok(p)) return "residue class: needs " + condition;
    for (const auto& [d, e] : fixed_divisors)
        if (divisor_degenerate(p, d, e, p - 1))
            return "degenerate divisor " + std::to_string(d) + "k+" + rat_str(e) +
                   " (s = -1 mod p)";
    return "";
}

namespace {

std::atomic<long> g_retries{0};

uint64_t case_seed(uint64_t seed, const std::string& id, long p) {
    uint64_t h = fnv1a(id);
    return seed ^ (h + 0x9E3779B97F4A7C15ull) ^ (static_cast<uint64_t>(p) * 0xD1B54A32D192ED03ull);
}

struct DrawOutcome {
    CheckResult::Verdict verdict;
    Int lhs = 0, rhs = 0;
    std::string reason;
    std::string probe;
};

DrawOutcome run_draw(const CongruenceCase& c, long p, CtxPool& pool, const EvalOptions& opt,
                     const Params& ps, int m) {
    DrawOutcome out;
    std::vector<PadicNum> sides;
    std::vector<Int> res;
    for (int attempt = 0;; ++attempt) {
        int prec = m + opt.guard + 3 * attempt;
        try {
            EvalContext& ctx = pool.at(prec);
            sides = c.sides(ctx, ps);
            res.clear();
            res.reserve(sides.size());
            for (const auto& s : sides) res.push_back(s.to_residue(m));
            break;
        } catch (const PrecisionLoss& e) {
            if (attempt == 0) {
                ++g_retries;
                continue;  // one automatic retry at guard+3
            }
            out.verdict = CheckResult::Verdict::skipped;
            out.reason = std::string("precision loss: ") + e.what();
            return out;
        } catch (const Error& e) {
            out.verdict = CheckResult::Verdict::skipped;
            out.reason = e.what();
            return out;
        }
    }
    out.lhs = res[0];
    out.rhs = res.size() > 1 ? res[1] : res[0];
    out.verdict = CheckResult::Verdict::pass;
    for (size_t i = 1; i < res.size(); ++i) {
        if (res[i] != res[0]) {
            out.verdict = CheckResult::Verdict::fail;
            out.rhs = res[i];
            break;
        }
    }
    if (c.probe_modulus > 0 && (!c.probe_when || c.probe_when(p))) {
        std::ostringstream os;
        os << "mod p^" << c.probe_modulus << " probe: ";
        try {
            Int first = sides[0].to_residue(c.probe_modulus);
            bool ok = true;
            for (size_t i = 1; i < sides.size(); ++i)
                ok = ok && sides[i].to_residue(c.probe_modulus) == first;
            os << (ok ? "pass" : "fail");
        } catch (const Error&) {
            os << "unavailable";
        }
        out.probe = os.str();
    }
    return out;
}

} // namespace

long precision_retries() { return g_retries.load(); }
void reset_precision_retries() { g_retries.store(0); }

CheckResult evaluate(const CongruenceCase& c, long p, CtxPool& pool, const EvalOptions& opt) {
    CheckResult r;
    r.case_id = c.id;
    r.p = p;
    int m_reg = c.modulus_for(p);
    int m = opt.mod_exp.value_or(m_reg);
    r.modulus = m;
    r.exploratory = m > m_reg;
    std::string why = c.applicable(p);
    if (!why.empty()) {
        r.reason = why;
        return r;
    }
    SplitMix rng(case_seed(opt.seed, c.id, p));
    const int draws = c.parameterized ? opt.draws : 1;
    bool have = false;
    CheckResult first = r;
    for (int i = 0; i < draws; ++i) {
        Params ps;
        if (c.parameterized) {
            auto s = c.sample(rng, p);
            if (!s) {
                if (!have) {
                    r.verdict = CheckResult::Verdict::skipped;
                    r.reason = "no admissible parameters";
                    r.draws = i;
                    return r;
                }
                break;
            }
            ps = *s;
        }
        DrawOutcome one = run_draw(c, p, pool, opt, ps, m);
        CheckResult cur = r;
        cur.verdict = one.verdict;
        cur.lhs = one.lhs;
        cur.rhs = one.rhs;
        cur.reason = one.reason;
        cur.probe = one.probe;
        cur.params = ps.str();
        cur.draws = draws;
        if (one.verdict == CheckResult::Verdict::fail) {
            cur.draws = i + 1;
            return cur;  // report the failing draw
        }
        if (!have || (first.verdict == CheckResult::Verdict::skipped &&
                      one.verdict == CheckResult::Verdict::pass)) {
            first = cur;
            have = true;
        }
    }
    return have ? first : r;
}

CheckResult evaluate(const CongruenceCase& c, long p, const EvalOptions& opt) {
    CtxPool pool(p);
    return evaluate(c, p, pool, opt);
}

CheckResult evaluate_with_params(const CongruenceCase& c, long p, const Params& ps,
                                 CtxPool& pool, const EvalOptions& opt) {
    CheckResult r;
    r.case_id = c.id;
    r.p = p;
    int m = opt.mod_exp.value_or(c.modulus_for(p));
    r.modulus = m;
    std::string why = c.applicable(p);
    if (!why.empty()) {
        r.reason = why;
        return r;
    }
    DrawOutcome one = run_draw(c, p, pool, opt, ps, m);
    r.verdict = one.verdict;
    r.lhs = one.lhs;
    r.rhs = one.rhs;
    r.reason = one.reason;
    r.probe = one.probe;
    r.params = ps.str();
    r.draws = 1;
    return r;
}

// ---------------------------------------------------------------------------
// registry
// ---------------------------------------------------------------------------

namespace {

Rat RQ(long n, long d = 1) { return make_rat(n, d); }

bool unit_mod_p(const Rat& x, long p) { return x != 0 && rat_valuation(x, p) == 0; }

Rat draw_rat(SplitMix& g, long p, const std::function<bool(const Rat&)>& ok, int tries = 400) {
    for (int i = 0; i < tries; ++i) {
        long n = g.range(-20, 20);
        long d = g.range(-20, 20);
        if (n == 0 || d == 0 || d % p == 0) continue;
        Rat r = RQ(n, d);
        if (r.get_den() % p == 0) continue;
        if (ok(r)) return r;
    }
    throw DegenerateParameter("sampler exhausted");
}

std::optional<Params> try_sample(const std::function<Params(SplitMix&, long)>& fn, SplitMix& g,
                                 long p) {
    try {
        return fn(g, p);
    } catch (const DegenerateParameter&) {
        return std::nullopt;
    }
}

using Sides = std::vector<PadicNum>;

// (-1)^e as a rational
Rat sgn(long e) { return RQ(e % 2 == 0 ? 1 : -1); }

std::vector<CongruenceCase> build_registry() {
    std::vector<CongruenceCase> reg;
    auto add = [&reg](CongruenceCase c) { reg.push_back(std::move(c)); };

    // ---- Rodriguez-Villegas sums, eq. (1.1) ----
    struct RV {
        const char* id;
        long fam;
        long sym;
    };
    for (auto [id, fam, sym] : {RV{"RV16", 16, -1}, RV{"RV27", 27, -3}, RV{"RV64", 64, -2},
                                RV{"RV432", 432, -1}}) {
        CongruenceCase c;
        c.id = id;
        c.modulus = 2;
        c.condition = "p > 3";
        c.citation = "(1.1)";
        long f = fam, s = sym;
        c.sides = [f, s](EvalContext& ctx, const Params&) -> Sides {
            return {sum_family(ctx, f, std::nullopt, false, SumRange::full),
                    ctx.lift(RQ(ctx.legendre_sym(s)))};
        };
        add(std::move(c));
    }

    // ---- GEN_RV, eq. (1.3) ----
    {
        CongruenceCase c;
        c.id = "GEN_RV";
        c.modulus = 2;
        c.condition = "p not dividing den(a)";
        c.citation = "(1.3)";
        c.parameterized = true;
        c.sample = [](SplitMix& g, long p) {
            return try_sample(
                [](SplitMix& g, long p) {
                    return Params{{{"a", draw_rat(g, p, [](const Rat&) { return true; })}}};
                },
                g, p);
        };
        c.sides = [](EvalContext& ctx, const Params& ps) -> Sides {
            const Rat& a = ps.get("a");
            return {sum_binom_pair(ctx, a, std::nullopt, false, SumRange::full),
                    ctx.lift(sgn(angle(a, ctx.p).angle))};
        };
        add(std::move(c));
    }

    // ---- GEN_ODD, eq. (1.4) ----
    {
        CongruenceCase c;
        c.id = "GEN_ODD";
        c.modulus = 2;
        c.condition = "p not dividing den(a)";
        c.citation = "(1.4)";
        c.parameterized = true;
        c.sample = [](SplitMix& g, long p) {
            return try_sample(
                [](SplitMix& g, long p) {
                    return Params{{{"a", draw_rat(g, p, [](const Rat&) { return true; })}}};
                },
                g, p);
        };
        c.sides = [](EvalContext& ctx, const Params& ps) -> Sides {
            const Rat& a = ps.get("a");
            Rat t = angle(a, ctx.p).cofactor;
            PadicNum lhs = sum_binom_pair(ctx, a, Weight{2, RQ(1)}, false, SumRange::full);
            return {ctx.lift(2 * a + 1) * lhs, ctx.lift(1 + 2 * t)};
        };
        add(std::move(c));
    }

    // ---- SUM_KA, eq. (2.8) ----
    {
        CongruenceCase c;
        c.id = "SUM_KA";
        c.modulus = 3;
        c.condition = "a a p-unit, t != -1 (mod p)";
        c.citation = "(2.8)";
        c.parameterized = true;
        c.sample = [](SplitMix& g, long p) {
            return try_sample(
                [](SplitMix& g, long p) {
                    Rat a = draw_rat(g, p, [p](const Rat& a) {
                        auto d = angle(a, p);
                        return d.angle != 0 && unit_mod_p(1 + d.cofactor, p);
                    });
                    return Params{{{"a", a}}};
                },
                g, p);
        };
        c.sides = [](EvalContext& ctx, const Params& ps) -> Sides {
            const Rat& a = ps.get("a");
            if (a == 0) throw DegenerateParameter("a = 0");
            long aa = angle(a, ctx.p).angle;
            Rat rhs = (a - aa) * (ctx.p + a - aa) / (a * a * a);
            rhs.canonicalize();
            return {sum_binom_pair(ctx, a, Weight{1, a}, false, SumRange::full), ctx.lift(rhs)};
        };
        add(std::move(c));
    }

    // ---- Lemma 2.1 contraction ----
    {
        CongruenceCase c;
        c.id = "LEM21";
        c.modulus = 3;
        c.condition = "a != 0 (mod p), b + <-b>_p != 0 (mod p^2), <a+b>_p > m";
        c.citation = "Lemma 2.1";
        c.parameterized = true;
        c.sample = [](SplitMix& g, long p) -> std::optional<Params> {
            for (int i = 0; i < 60; ++i) {
                try {
                    Rat a = draw_rat(g, p, [p](const Rat& a) { return angle(a, p).angle != 0; });
                    Rat b = draw_rat(g, p, [p](const Rat& b) {
                        Rat q = b + angle(-b, p).angle;
                        q.canonicalize();
                        return q != 0 && rat_valuation(q, p) < 2;
                    });
                    long aa = angle(a, p).angle;
                    long m = g.below(aa);
                    if (angle(a + b, p).angle <= m) continue;
                    return Params{{{"a", a}, {"b", b}, {"m", RQ(m)}}};
                } catch (const DegenerateParameter&) {
                    return std::nullopt;
                }
            }
            return std::nullopt;
        };
        c.sides = [](EvalContext& ctx, const Params& ps) -> Sides {
            const Rat &a = ps.get("a"), &b = ps.get("b");
            long m = ps.get("m").get_num().get_si();
            PadicNum ratio = gen_binom(a - b, m + 1, ctx.p, ctx.prec) /
                             gen_binom(a + b, m + 1, ctx.p, ctx.prec);
            return {sum_central(ctx, a, b), ratio * sum_central(ctx, a - m - 1, b)};
        };
        add(std::move(c));
    }

    // ---- Lemma 2.2 (a = pt) ----
    {
        CongruenceCase c;
        c.id = "LEM22";
        c.modulus = 3;
        c.condition = "bt != 0 (mod p), s != -1 (mod p)";
        c.citation = "Lemma 2.2";
        c.parameterized = true;
        c.sample = [](SplitMix& g, long p) {
            return try_sample(
                [](SplitMix& g, long p) {
                    Rat t = draw_rat(g, p, [p](const Rat& t) { return angle(t, p).angle != 0; });
                    Rat b = draw_rat(g, p, [p](const Rat& b) {
                        auto d = angle(b, p);
                        return d.angle != 0 && unit_mod_p(d.cofactor + 1, p);
                    });
                    return Params{{{"t", t}, {"b", b}}};
                },
                g, p);
        };
        c.sides = [](EvalContext& ctx, const Params& ps) -> Sides {
            const Rat &t = ps.get("t"), &b = ps.get("b");
            if (b == 0) throw DegenerateParameter("b = 0");
            Rat pt = ctx.p * t;
            PadicNum lhs = sum_central(ctx, pt, b);  // rejects s = -1 mod p
            Rat s = angle(b, ctx.p).cofactor;
            Rat rhs = (1 + t / (s + 1)) * Rat(ctx.p) / b * (1 - pt / b);
            rhs.canonicalize();
            return {lhs, ctx.lift(rhs)};
        };
        add(std::move(c));
    }

    // ---- Theorem 2.1, both branches ----
    {
        CongruenceCase c;
        c.id = "THM21_LOW";
        c.modulus = 2;
        c.condition = "ab != 0 (mod p), <b>_p <= min(<a>_p, p-1-<a>_p), s != -1 (mod p)";
        c.citation = "Theorem 2.1";
        c.parameterized = true;
        c.sample = [](SplitMix& g, long p) {
            return try_sample(
                [](SplitMix& g, long p) {
                    Rat a = draw_rat(g, p, [p](const Rat& a) { return angle(a, p).angle != 0; });
                    long aa = angle(a, p).angle;
                    Rat b = draw_rat(g, p, [p, aa](const Rat& b) {
                        auto d = angle(b, p);
                        return d.angle != 0 && d.angle <= aa && d.angle <= p - 1 - aa &&
                               unit_mod_p(d.cofactor + 1, p);
                    });
                    return Params{{{"a", a}, {"b", b}}};
                },
                g, p);
        };
        c.sides = [](EvalContext& ctx, const Params& ps) -> Sides {
            const Rat &a = ps.get("a"), &b = ps.get("b");
            if (b == 0) throw DegenerateParameter("b = 0");
            auto [aa, t] = angle(a, ctx.p);
            auto [bb, s] = angle(b, ctx.p);
            PadicNum lhs = sum_binom_pair(ctx, a, Weight{1, b}, false, SumRange::full);
            Rat num = ctx.p * (s + t + 1) * (s - t);
            Rat den = b * b * (s + 1);
            num.canonicalize();
            den.canonicalize();
            PadicNum rhs = ctx.lift(num) /
                           (ctx.lift(den) * ctx.binom(aa, bb) * ctx.binom(ctx.p - 1 - aa, bb));
            return {lhs, rhs};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM21_HIGH";
        c.modulus = 2;
        c.condition = "ab != 0 (mod p), <a>_p < <b>_p <= p-1-<a>_p, s != -1 (mod p)";
        c.citation = "Theorem 2.1";
        c.parameterized = true;
        c.sample = [](SplitMix& g, long p) {
            return try_sample(
                [](SplitMix& g, long p) {
                    Rat a = draw_rat(g, p, [p](const Rat& a) { return angle(a, p).angle != 0; });
                    long aa = angle(a, p).angle;
                    Rat b = draw_rat(g, p, [p, aa](const Rat& b) {
                        auto d = angle(b, p);
                        return d.angle > aa && d.angle <= p - 1 - aa &&
                               unit_mod_p(d.cofactor + 1, p);
                    });
                    return Params{{{"a", a}, {"b", b}}};
                },
                g, p);
        };
        c.sides = [](EvalContext& ctx, const Params& ps) -> Sides {
            const Rat &a = ps.get("a"), &b = ps.get("b");
            auto [aa, t] = angle(a, ctx.p);
            auto [bb, s] = angle(b, ctx.p);
            if (b == 0 || s == -1) throw DegenerateParameter("b = 0 or s = -1");
            const long p = ctx.p;
            PadicNum lhs = sum_binom_pair(ctx, a, Weight{1, b}, false, SumRange::full);
            Rat pref = (s + 1 + t) / (b * (s + 1));
            pref.canonicalize();
            PadicNum inner = ctx.lift(1L) + ctx.lift(p * (s + 1) / b) +
                             ctx.lift(p * (2 * s + 1)) * ctx.harmonic_num(bb - 1) -
                             ctx.lift(p * (s - t)) * ctx.harmonic_num(bb - aa - 1) -
                             ctx.lift(p * (s + t + 1)) * ctx.harmonic_num(aa + bb);
            PadicNum rhs = ctx.lift(pref) * ctx.binom(bb - 1, aa) / ctx.binom(p - 1 - bb, aa) * inner;
            return {lhs, rhs};
        };
        add(std::move(c));
    }

    // ---- Corollary 2.1 ----
    {
        CongruenceCase c;
        c.id = "COR21";
        c.modulus = 2;
        c.condition = "1 <= <a>_p <= (p-3)/2, t != -1 (mod p)";
        c.citation = "Corollary 2.1";
        c.parameterized = true;
        c.sample = [](SplitMix& g, long p) {
            return try_sample(
                [](SplitMix& g, long p) {
                    Rat a = draw_rat(g, p, [p](const Rat& a) {
                        auto d = angle(a, p);
                        return 1 <= d.angle && d.angle <= (p - 3) / 2 &&
                               unit_mod_p(d.cofactor + 1, p);
                    });
                    return Params{{{"a", a}}};
                },
                g, p);
        };
        c.sides = [](EvalContext& ctx, const Params& ps) -> Sides {
            const Rat& a = ps.get("a");
            auto [aa, t] = angle(a, ctx.p);
            if (a == -1 || t == -1) throw DegenerateParameter("a = -1 or t = -1");
            const long p = ctx.p;
            PadicNum lhs = sum_binom_pair(ctx, a, Weight{1, a + 1}, false, SumRange::full);
            Rat pref = (2 * t + 1) / ((a + 1) * (t + 1));
            pref.canonicalize();
            PadicNum inner = ctx.lift(1L) + ctx.lift(p * (t + 1) / (a + 1)) -
                             ctx.lift(p * (2 * t + 1)) *
                                 (ctx.harmonic_num(2 * aa + 1) - ctx.harmonic_num(aa));
            return {lhs, ctx.lift(pref) / ctx.binom(p - 2 - aa, aa) * inner};
        };
        add(std::move(c));
    }

    // ---- Theorem 2.2: (2.10)-(2.14) ----
    {
        CongruenceCase c;
        c.id = "THM22_10";
        c.modulus = 2;
        c.condition = "1 <= <b>_p < p/2, s != -1 (mod p)";
        c.citation = "(2.10)";
        c.parameterized = true;
        c.sample = [](SplitMix& g, long p) {
            return try_sample(
                [](SplitMix& g, long p) {
                    Rat b = draw_rat(g, p, [p](const Rat& b) {
                        auto d = angle(b, p);
                        return d.angle >= 1 && 2 * d.angle < p && unit_mod_p(d.cofactor + 1, p);
                    });
                    return Params{{{"b", b}}};
                },
                g, p);
        };
        c.sides = [](EvalContext& ctx, const Params& ps) -> Sides {
            const Rat& b = ps.get("b");
            auto [bb, s] = angle(b, ctx.p);
            PadicNum lhs = sum_family(ctx, 16, Weight{1, b}, false, SumRange::full);
            Rat num = (s + RQ(1, 2)) * (s + RQ(1, 2)) * ctx.p;
            Rat den = b * b * (s + 1);
            num.canonicalize();
            den.canonicalize();
            PadicNum cb = ctx.binom((ctx.p - 1) / 2, bb);
            return {lhs, ctx.lift(num) / (ctx.lift(den) * cb * cb)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM22_11";
        c.modulus = 2;
        c.condition = "1 <= <b>_p < p/2, s != -1 (mod p)";
        c.citation = "(2.11)";
        c.parameterized = true;
        c.sample = [](SplitMix& g, long p) {
            return try_sample(
                [](SplitMix& g, long p) {
                    Rat b = draw_rat(g, p, [p](const Rat& b) {
                        auto d = angle(b, p);
                        return d.angle >= 1 && 2 * d.angle < p && unit_mod_p(d.cofactor + 1, p);
                    });
                    return Params{{{"b", b}}};
                },
                g, p);
        };
        c.sides = [](EvalContext& ctx, const Params& ps) -> Sides {
            const Rat& b = ps.get("b");
            long bb = angle(b, ctx.p).angle;
            PadicNum lhs = sum_family(ctx, 16, Weight{1, b}, false, SumRange::half);
            Rat num = b - bb;
            num.canonicalize();
            PadicNum cb = ctx.binom((ctx.p - 1) / 2, bb);
            Rat den = b * b;
            den.canonicalize();
            return {lhs, ctx.lift(num) / (ctx.lift(den) * cb * cb)};
        };
        add(std::move(c));
    }
    struct T22 {
        const char* id;
        const char* cite;
        long fam;
        int bound;
        Rat f1, f2;
    };
    for (auto [id, cite, fam, bound, f1, f2] :
         {T22{"THM22_12", "(2.12)", 27, 3, RQ(1, 3), RQ(2, 3)},
          T22{"THM22_13", "(2.13)", 64, 4, RQ(1, 4), RQ(3, 4)},
          T22{"THM22_14", "(2.14)", 432, 6, RQ(1, 6), RQ(5, 6)}}) {
        CongruenceCase c;
        c.id = id;
        c.modulus = 2;
        c.condition = "1 <= <b>_p < p/" + std::to_string(bound) + ", s != -1 (mod p)";
        c.citation = cite;
        c.parameterized = true;
        int bd = bound;
        c.sample = [bd](SplitMix& g, long p) {
            return try_sample(
                [bd](SplitMix& g, long p) {
                    Rat b = draw_rat(g, p, [p, bd](const Rat& b) {
                        auto d = angle(b, p);
                        return d.angle >= 1 && bd * d.angle < p && unit_mod_p(d.cofactor + 1, p);
                    });
                    return Params{{{"b", b}}};
                },
                g, p);
        };
        long fm = fam;
        Rat q1 = f1, q2 = f2;
        c.sides = [fm, bd, q1, q2](EvalContext& ctx, const Params& ps) -> Sides {
            const Rat& b = ps.get("b");
            auto [bb, s] = angle(b, ctx.p);
            long q = ctx.p / bd;
            PadicNum lhs = sum_family(ctx, fm, Weight{1, b}, false, SumRange::full);
            Rat num = (s + q1) * (s + q2) * ctx.p * sgn(bb);
            Rat den = b * b * (s + 1);
            num.canonicalize();
            den.canonicalize();
            PadicNum rhs = ctx.lift(num) /
                           (ctx.lift(den) * ctx.binom(2 * bb, bb) * ctx.binom(q + bb, q - bb));
            return {lhs, rhs};
        };
        add(std::move(c));
    }

    // ---- the four example chains after Theorem 2.2 ----
    {
        CongruenceCase c;
        c.id = "EX22_1";
        c.modulus = 2;
        c.condition = "p = 1 mod 4";
        c.citation = "Section 2 examples";
        c.residue_ok = [](long p) { return p % 4 == 1; };
        c.fixed_divisors = {{4, RQ(3)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum cb = ctx.binom((p - 1) / 2, (p - 1) / 4);
            return {ctx.lift(-1L) * sum_family(ctx, 16, Weight{4, RQ(3)}, false, SumRange::half),
                    ctx.lift(3L) * sum_family(ctx, 16, Weight{4, RQ(3)}, false, SumRange::full),
                    ctx.pn(1) / (cb * cb)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "EX22_2";
        c.modulus = 2;
        c.condition = "p = 5 mod 6";
        c.citation = "Section 2 examples";
        c.residue_ok = [](long p) { return p % 6 == 5; };
        c.fixed_divisors = {{3, RQ(1)}, {6, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum cb = ctx.binom((p - 1) / 2, (p - 5) / 6);
            return {ctx.lift(8L) * sum_family(ctx, 16, Weight{3, RQ(1)}, false, SumRange::full),
                    ctx.lift(5L) * sum_family(ctx, 16, Weight{6, RQ(1)}, false, SumRange::full),
                    ctx.pn(1) / (cb * cb)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "EX22_3";
        c.modulus = 2;
        c.condition = "p = 5 mod 8";
        c.citation = "Section 2 examples";
        c.residue_ok = [](long p) { return p % 8 == 5; };
        c.fixed_divisors = {{8, RQ(1)}, {8, RQ(3)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum cb = ctx.binom(p / 4, p / 8);
            return {ctx.lift(45L) * sum_family(ctx, 16, Weight{8, RQ(1)}, false, SumRange::full),
                    ctx.lift(7L) * sum_family(ctx, 16, Weight{8, RQ(3)}, false, SumRange::full),
                    ctx.lift(-1L) * ctx.pn(1) / (cb * cb)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "EX22_4";
        c.modulus = 2;
        c.condition = "p = 7 mod 8";
        c.citation = "Section 2 examples";
        c.residue_ok = [](long p) { return p % 8 == 7; };
        c.fixed_divisors = {{8, RQ(1)}, {8, RQ(3)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum cb = ctx.binom(p / 4, p / 8);
            return {ctx.lift(RQ(14, 9)) * sum_family(ctx, 16, Weight{8, RQ(1)}, false, SumRange::full),
                    ctx.lift(10L) * sum_family(ctx, 16, Weight{8, RQ(3)}, false, SumRange::full),
                    ctx.pn(1) / (cb * cb)};
        };
        add(std::move(c));
    }

    // ---- Theorem 2.3: (2.15)-(2.20) ----
    {
        CongruenceCase c;
        c.id = "THM23_15";
        c.modulus = 2;
        c.condition = "p = 1 mod 3";
        c.citation = "(2.15)";
        c.residue_ok = [](long p) { return p % 3 == 1; };
        c.fixed_divisors = {{3, RQ(2)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            return {sum_family(ctx, 27, Weight{3, RQ(2)}, false, SumRange::full),
                    ctx.one() / (ctx.lift(2L) * ctx.binom(2 * (p - 1) / 3, (p - 1) / 3))};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM23_16";
        c.modulus = 2;
        c.condition = "p = 2 mod 3";
        c.citation = "(2.16)";
        c.residue_ok = [](long p) { return p % 3 == 2; };
        c.fixed_divisors = {{3, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            return {sum_family(ctx, 27, Weight{3, RQ(1)}, false, SumRange::full),
                    ctx.lift(RQ(1 + 2 * p, 2)) / ctx.binom(2 * (p - 2) / 3, (p - 2) / 3)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM23_17";
        c.modulus = 2;
        c.condition = "p = 1 mod 4";
        c.citation = "(2.17)";
        c.residue_ok = [](long p) { return p % 4 == 1; };
        c.fixed_divisors = {{4, RQ(3)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum num = ctx.powmod(2, Int(p - 1)) + ctx.one();
            PadicNum rhs = ctx.lift(sgn((p - 1) / 4)) * num /
                           (ctx.lift(6L) * ctx.binom((p - 1) / 2, (p - 1) / 4));
            return {sum_family(ctx, 64, Weight{4, RQ(3)}, false, SumRange::full), rhs};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM23_18";
        c.modulus = 2;
        c.condition = "p = 3 mod 4";
        c.citation = "(2.18)";
        c.residue_ok = [](long p) { return p % 4 == 3; };
        c.fixed_divisors = {{4, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum num = ctx.powmod(2, Int(p - 1)) + ctx.lift(2 * p + 1);
            PadicNum rhs = ctx.lift(sgn((p + 1) / 4)) * num /
                           (ctx.lift(6L) * ctx.binom((p - 3) / 2, (p - 3) / 4));
            return {sum_family(ctx, 64, Weight{4, RQ(1)}, false, SumRange::full), rhs};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM23_19";
        c.modulus = 2;
        c.condition = "p = 1 mod 6";
        c.citation = "(2.19)";
        c.residue_ok = [](long p) { return p % 6 == 1; };
        c.fixed_divisors = {{6, RQ(5)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum num = ctx.one() - ctx.lift(RQ(4, 3)) * (ctx.powmod(2, Int(p - 1)) - ctx.one());
            PadicNum rhs = num / (ctx.lift(5L) * ctx.binom(5 * (p - 1) / 6, (p - 1) / 6));
            return {sum_family(ctx, 432, Weight{6, RQ(5)}, false, SumRange::full), rhs};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM23_20";
        c.modulus = 2;
        c.condition = "p = 5 mod 6";
        c.citation = "(2.20)";
        c.residue_ok = [](long p) { return p % 6 == 5; };
        c.fixed_divisors = {{6, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum num = ctx.lift(1 + 5 * Rat(p)) -
                           ctx.lift(RQ(4, 3)) * (ctx.powmod(2, Int(p - 1)) - ctx.one());
            PadicNum rhs = ctx.lift(RQ(4, 5)) * num / ctx.binom((5 * p - 7) / 6, (p - 5) / 6);
            return {sum_family(ctx, 432, Weight{6, RQ(1)}, false, SumRange::full), rhs};
        };
        add(std::move(c));
    }

    // ---- Theorem 2.4 ----
    {
        CongruenceCase c;
        c.id = "THM24";
        c.modulus = 2;
        c.condition = "p > 3 (split mod 6)";
        c.citation = "Theorem 2.4";
        c.fixed_divisors = {{3, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum lhs = sum_family(ctx, 432, Weight{3, RQ(1)}, false, SumRange::full);
            if (p % 6 == 1) {
                PadicNum rhs = (ctx.powmod(2, Int(p - 1)) + ctx.lift(2L)) /
                               (ctx.lift(3L) * ctx.powmod(2, Int((p - 1) / 3)));
                return {lhs, rhs};
            }
            PadicNum rhs = ctx.powmod(2, Int((p + 1) / 3)) *
                           (ctx.powmod(2, Int(p - 3)) - ctx.one());
            return {lhs, rhs};
        };
        add(std::move(c));
    }

    // ---- Conjectures 2.1-2.3 ----
    {
        CongruenceCase c;
        c.id = "CONJ21";
        c.status = Status::conjecture;
        c.modulus = 2;
        c.condition = "p = 1 mod 4 (p^2 for p = 1 mod 12, p for p = 5 mod 12)";
        c.citation = "Conjecture 2.1";
        c.residue_ok = [](long p) { return p % 4 == 1; };
        c.fixed_divisors = {{4, RQ(1)}};
        c.modulus_override = [](long p) { return p % 12 == 1 ? 2 : 1; };
        c.probe_modulus = 2;
        c.probe_when = [](long p) { return p % 12 == 5; };
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum lhs = sum_family(ctx, 432, Weight{4, RQ(1)}, false, SumRange::full);
            if (p % 12 == 1) {
                const QuadRep& r = ctx.quad(1, 9, Normalization::positive);
                return {lhs, ctx.lift(sgn(r.y))};
            }
            Int rhs = pow_residue(Int(ctx.modulus() - 3), Int((p - 1) / 4), p, ctx.prec);
            return {lhs, PadicNum::from_residue(rhs, p, ctx.prec)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "CONJ22a";
        c.status = Status::conjecture;
        c.modulus = 2;
        c.condition = "p > 3";
        c.citation = "Conjecture 2.2";
        c.fixed_divisors = {{3, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            return {sum_family(ctx, 64, Weight{3, RQ(1)}, false, SumRange::full),
                    ctx.lift(ctx.p % 3 == 1 ? RQ(1) : RQ(-5, 4))};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "CONJ22b";
        c.status = Status::conjecture;
        c.modulus = 2;
        c.condition = "p > 3, p != 5";
        c.citation = "Conjecture 2.2";
        c.fixed_divisors = {{3, RQ(2)}};
        c.exclude_p = 5;
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            return {sum_family(ctx, 64, Weight{3, RQ(2)}, false, SumRange::full),
                    ctx.lift(ctx.p % 3 == 1 ? RQ(1, 2) : RQ(-2, 5))};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "CONJ23";
        c.status = Status::conjecture;
        c.modulus = 3;
        c.condition = "p = 1 mod 6";
        c.citation = "Conjecture 2.3";
        c.residue_ok = [](long p) { return p % 6 == 1; };
        c.fixed_divisors = {{6, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            const QuadRep& r = ctx.quad(1, 3, Normalization::positive);
            Rat x2 = 4 * Rat(r.x) * Rat(r.x);
            Rat rhs = x2 - 2 * p - Rat(p) * Rat(p) / x2;
            rhs.canonicalize();
            return {sum_family(ctx, 64, Weight{6, RQ(1)}, true, SumRange::full),
                    ctx.lift(sgn((p - 1) / 6) * rhs)};
        };
        add(std::move(c));
    }

    // ---- Theorem 3.1 ----
    {
        CongruenceCase c;
        c.id = "THM31";
        c.modulus = 2;
        c.condition = "1 <= <a>_p < p/2, t != 0 (mod p)";
        c.citation = "Theorem 3.1";
        c.parameterized = true;
        c.sample = [](SplitMix& g, long p) {
            return try_sample(
                [](SplitMix& g, long p) {
                    Rat a = draw_rat(g, p, [p](const Rat& a) {
                        auto d = angle(a, p);
                        return d.angle >= 1 && 2 * d.angle < p && unit_mod_p(d.cofactor, p);
                    });
                    return Params{{{"a", a}}};
                },
                g, p);
        };
        c.sides = [](EvalContext& ctx, const Params& ps) -> Sides {
            const Rat& a = ps.get("a");
            auto [aa, t] = angle(a, ctx.p);
            if (t == 0) throw DegenerateParameter("t = 0");
            PadicNum lhs = sum_binom_pair(ctx, a, Weight{1, -a}, true, SumRange::full);
            PadicNum inner = ctx.lift(Rat(1) / t) + ctx.lift(2 * Rat(ctx.p)) *
                                                   (ctx.harmonic_num(2 * aa) - ctx.harmonic_num(aa));
            return {lhs, ctx.lift(sgn(aa - 1)) * ctx.binom(2 * aa, aa) * inner};
        };
        add(std::move(c));
    }

    // ---- Theorems 3.2-3.4 ----
    {
        CongruenceCase c;
        c.id = "THM32";
        c.modulus = 2;
        c.condition = "p = 1 mod 4";
        c.citation = "Theorem 3.2";
        c.residue_ok = [](long p) { return p % 4 == 1; };
        c.fixed_divisors = {{4, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum rhs = ctx.lift(sgn((p - 1) / 4)) *
                           (ctx.lift(3L) - ctx.powmod(2, Int(p - 1))) / ctx.lift(2L) *
                           ctx.binom((p - 1) / 2, (p - 1) / 4);
            return {sum_family(ctx, 64, Weight{4, RQ(1)}, true, SumRange::full), rhs};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM33";
        c.modulus = 2;
        c.condition = "p = 1 mod 3";
        c.citation = "Theorem 3.3";
        c.residue_ok = [](long p) { return p % 3 == 1; };
        c.fixed_divisors = {{3, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            return {sum_family(ctx, 27, Weight{3, RQ(1)}, true, SumRange::full),
                    ctx.binom(2 * (p - 1) / 3, (p - 1) / 3)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM34";
        c.modulus = 2;
        c.condition = "p = 1 mod 6";
        c.citation = "Theorem 3.4";
        c.residue_ok = [](long p) { return p % 6 == 1; };
        c.fixed_divisors = {{6, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum rhs = (ctx.lift(5L) - ctx.powmod(2, Int(p))) / ctx.lift(3L) *
                           ctx.lift(sgn((p - 1) / 6)) * ctx.binom((p - 1) / 3, (p - 1) / 6);
            return {sum_family(ctx, 432, Weight{6, RQ(1)}, true, SumRange::full), rhs};
        };
        add(std::move(c));
    }

    // ---- Theorem 4.1 (five-way chain) and Corollary 4.1 ----
    {
        CongruenceCase c;
        c.id = "THM41";
        c.modulus = 2;
        c.condition = "<b>_p > p/2, s != -1 (mod p)";
        c.citation = "Theorem 4.1";
        c.parameterized = true;
        c.sample = [](SplitMix& g, long p) {
            return try_sample(
                [](SplitMix& g, long p) {
                    Rat b = draw_rat(g, p, [p](const Rat& b) {
                        auto d = angle(b, p);
                        return 2 * d.angle > p && unit_mod_p(d.cofactor + 1, p);
                    });
                    return Params{{{"b", b}}};
                },
                g, p);
        };
        c.sides = [](EvalContext& ctx, const Params& ps) -> Sides {
            const Rat& b = ps.get("b");
            auto [bb, s] = angle(b, ctx.p);
            if (s == -1) throw DegenerateParameter("s = -1");
            const long p = ctx.p;
            const long h = bb - (p + 1) / 2, r = p - bb;
            PadicNum full = sum_binom_pair(ctx, RQ(-1, 2), Weight{1, b}, true, SumRange::full);
            PadicNum half = sum_family(ctx, 16, Weight{1, b}, true, SumRange::half);
            PadicNum Hr = ctx.harmonic_num(r), Hh = ctx.harmonic_num(h);
            PadicNum c2h = ctx.binom(2 * h, h), c2r = ctx.binom(2 * r, r);
            PadicNum s1 = ctx.lift(Rat(1) / (s + 1));
            PadicNum rhs1 = c2h * c2h * s1 / ctx.powmod(16, Int(h)) *
                            (ctx.one() + ctx.lift(Rat(p) * (2 * s + 1)) * (Hr - Hh));
            PadicNum cbr = ctx.binom((p - 1) / 2, r);
            PadicNum rhs2 = s1 * cbr * cbr *
                            (ctx.one() + ctx.lift(Rat(p)) *
                                             (ctx.lift(2L) * ctx.fermat_q(2) +
                                              ctx.lift(2 * s + 2) * Hr - ctx.lift(2 * s + 1) * Hh));
            PadicNum rhs3 = c2r * c2r * s1 / ctx.powmod(16, Int(r)) *
                            (ctx.one() + ctx.lift(Rat(p) * (2 * s + 2)) * (Hr - Hh));
            return {full, half, rhs1, rhs2, rhs3};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "COR41";
        c.modulus = 2;
        c.condition = "<b>_p > p/2, s != -1, -1/2 (mod p)";
        c.citation = "Corollary 4.1";
        c.parameterized = true;
        c.sample = [](SplitMix& g, long p) {
            return try_sample(
                [](SplitMix& g, long p) {
                    Rat b = draw_rat(g, p, [p](const Rat& b) {
                        auto d = angle(b, p);
                        return 2 * d.angle > p && unit_mod_p(d.cofactor + 1, p) &&
                               unit_mod_p(2 * d.cofactor + 1, p);
                    });
                    return Params{{{"b", b}}};
                },
                g, p);
        };
        c.sides = [](EvalContext& ctx, const Params& ps) -> Sides {
            const Rat& b = ps.get("b");
            Rat s = angle(b, ctx.p).cofactor;
            if (2 * s + 1 == 0 || s == -1) throw DegenerateParameter("s = -1 or s = -1/2");
            PadicNum lhs = sum_family(ctx, 16, Weight{1, RQ(1, 2) - b}, true, SumRange::full);
            Rat coef = -(2 * s + 2) / (2 * s + 1);
            coef.canonicalize();
            PadicNum rhs = ctx.lift(coef) * sum_family(ctx, 16, Weight{1, b}, true, SumRange::full);
            return {lhs, rhs};
        };
        add(std::move(c));
    }

    // ---- Theorems 4.2-4.4 ----
    {
        CongruenceCase c;
        c.id = "THM42a";
        c.modulus = 2;
        c.condition = "p = 1 mod 3";
        c.citation = "Theorem 4.2";
        c.residue_ok = [](long p) { return p % 3 == 1; };
        c.fixed_divisors = {{3, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const QuadRep& r = ctx.quad(1, 3, Normalization::positive);
            return {sum_family(ctx, 16, Weight{3, RQ(1)}, true, SumRange::full),
                    ctx.lift(4 * Rat(r.x) * r.x - 2 * ctx.p)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM42b";
        c.modulus = 2;
        c.condition = "p = 1 mod 3";
        c.citation = "Theorem 4.2";
        c.residue_ok = [](long p) { return p % 3 == 1; };
        c.fixed_divisors = {{6, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const QuadRep& r = ctx.quad(1, 3, Normalization::positive);
            return {sum_family(ctx, 16, Weight{6, RQ(1)}, true, SumRange::full),
                    ctx.lift(4 * Rat(r.x) * r.x - 2 * ctx.p)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM43a";
        c.modulus = 2;
        c.condition = "p = 1,3 mod 8";
        c.citation = "Theorem 4.3";
        c.residue_ok = [](long p) { return p % 8 == 1 || p % 8 == 3; };
        c.fixed_divisors = {{8, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            const QuadRep& r = ctx.quad(1, 2, Normalization::positive);
            long sg = (p - 1) / 2 % 2 == 0 ? 1 : -1;
            return {ctx.lift(2 - sg) * sum_family(ctx, 16, Weight{8, RQ(1)}, true, SumRange::full),
                    ctx.lift(4 * Rat(r.x) * r.x - 2 * p)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM43b";
        c.modulus = 2;
        c.condition = "p = 1,3 mod 8";
        c.citation = "Theorem 4.3";
        c.residue_ok = [](long p) { return p % 8 == 1 || p % 8 == 3; };
        c.fixed_divisors = {{8, RQ(3)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            const QuadRep& r = ctx.quad(1, 2, Normalization::positive);
            long sg = (p - 1) / 2 % 2 == 0 ? 1 : -1;
            return {ctx.lift(2 + sg) * sum_family(ctx, 16, Weight{8, RQ(3)}, true, SumRange::full),
                    ctx.lift(4 * Rat(r.x) * r.x - 2 * p)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM44a";
        c.modulus = 2;
        c.condition = "p = 1 mod 4";
        c.citation = "Theorem 4.4";
        c.residue_ok = [](long p) { return p % 4 == 1; };
        c.fixed_divisors = {{12, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            const QuadRep& r = ctx.quad(1, 4, Normalization::positive);  // odd x
            long lam = p % 3 == 1 ? 1 : -1;
            return {ctx.lift(3 * lam - 2) *
                        sum_family(ctx, 16, Weight{12, RQ(1)}, true, SumRange::full),
                    ctx.lift(4 * Rat(r.x) * r.x - 2 * p)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM44b";
        c.modulus = 2;
        c.condition = "p = 1 mod 4";
        c.citation = "Theorem 4.4";
        c.residue_ok = [](long p) { return p % 4 == 1; };
        c.fixed_divisors = {{12, RQ(5)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            const QuadRep& r = ctx.quad(1, 4, Normalization::positive);
            long lam = p % 3 == 1 ? 1 : -1;
            return {ctx.lift(3 * lam + 2) *
                        sum_family(ctx, 16, Weight{12, RQ(5)}, true, SumRange::full),
                    ctx.lift(4 * Rat(r.x) * r.x - 2 * p)};
        };
        add(std::move(c));
    }

    // ---- (4.8)/(4.9) with the in-text 864-kernel sum ----
    {
        CongruenceCase c;
        c.id = "AUX48_49";
        c.modulus = 2;
        c.condition = "p = 1 mod 4";
        c.citation = "(4.8)-(4.9)";
        c.residue_ok = [](long p) { return p % 4 == 1; };
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            long cv = ctx.cval();
            PadicNum mid = ctx.lift(2 * Rat(cv)) - ctx.pn(1) / ctx.lift(2 * Rat(cv));
            PadicNum inner =
                ctx.one() - ctx.lift(Rat(p)) * (ctx.lift(RQ(3, 2)) * ctx.fermat_q(2) +
                                                ctx.lift(RQ(5, 4)) * ctx.fermat_q(3) +
                                                ctx.lift(RQ(1, 3)) * ctx.harmonic_num(p / 12));
            return {sum_family(ctx, 864, std::nullopt, false, SumRange::full), mid,
                    ctx.binom((p - 1) / 2, p / 12) * inner};
        };
        add(std::move(c));
    }

    // ---- the 128-kernel sum restated in the proof of Theorem 4.3 ----
    {
        CongruenceCase c;
        c.id = "AUX_S5_128";
        c.modulus = 2;
        c.condition = "p = 1,3 mod 8";
        c.citation = "[S5, Theorem 4.3]";
        c.residue_ok = [](long p) { return p % 8 == 1 || p % 8 == 3; };
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            const QuadRep& r = ctx.quad(1, 2, Normalization::x_mod4_1);
            PadicNum rhs = ctx.lift(sgn(p / 8 + (p - 1) / 2)) *
                           (ctx.lift(2 * Rat(r.x)) - ctx.pn(1) / ctx.lift(2 * Rat(r.x)));
            return {sum_family(ctx, 128, std::nullopt, false, SumRange::full), rhs};
        };
        add(std::move(c));
    }

    // ---- Conjectures 4.1-4.3 (mod p^3) ----
    {
        CongruenceCase c;
        c.id = "CONJ41";
        c.status = Status::conjecture;
        c.modulus = 3;
        c.condition = "p = 1 mod 6";
        c.citation = "Conjecture 4.1";
        c.residue_ok = [](long p) { return p % 6 == 1; };
        c.fixed_divisors = {{3, RQ(1)}, {6, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            const QuadRep& r = ctx.quad(1, 3, Normalization::positive);
            Rat x2 = 4 * Rat(r.x) * r.x;
            Rat rhs = x2 - 2 * p - Rat(p) * p / x2;
            rhs.canonicalize();
            return {sum_family(ctx, 16, Weight{3, RQ(1)}, true, SumRange::full),
                    sum_family(ctx, 16, Weight{6, RQ(1)}, true, SumRange::full), ctx.lift(rhs)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "CONJ42";
        c.status = Status::conjecture;
        c.modulus = 3;
        c.condition = "p = 1,3 mod 8";
        c.citation = "Conjecture 4.2";
        c.residue_ok = [](long p) { return p % 8 == 1 || p % 8 == 3; };
        c.fixed_divisors = {{8, RQ(1)}, {8, RQ(3)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            const QuadRep& r = ctx.quad(1, 2, Normalization::positive);
            long sg = (p - 1) / 2 % 2 == 0 ? 1 : -1;
            Rat x2 = 4 * Rat(r.x) * r.x;
            Rat rhs = x2 - 2 * p - Rat(p) * p / x2;
            rhs.canonicalize();
            return {ctx.lift(2 - sg) * sum_family(ctx, 16, Weight{8, RQ(1)}, true, SumRange::full),
                    ctx.lift(2 + sg) * sum_family(ctx, 16, Weight{8, RQ(3)}, true, SumRange::full),
                    ctx.lift(rhs)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "CONJ43";
        c.status = Status::conjecture;
        c.modulus = 3;
        c.condition = "p = 1 mod 4";
        c.citation = "Conjecture 4.3";
        c.residue_ok = [](long p) { return p % 4 == 1; };
        c.fixed_divisors = {{12, RQ(1)}, {12, RQ(5)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            const QuadRep& r = ctx.quad(1, 4, Normalization::positive);
            long lam = p % 3 == 1 ? 1 : -1;
            Rat x2 = 4 * Rat(r.x) * r.x;
            Rat rhs = x2 - 2 * p - Rat(p) * p / x2;
            rhs.canonicalize();
            return {ctx.lift(3 * lam - 2) *
                        sum_family(ctx, 16, Weight{12, RQ(1)}, true, SumRange::full),
                    ctx.lift(3 * lam + 2) *
                        sum_family(ctx, 16, Weight{12, RQ(5)}, true, SumRange::full),
                    ctx.lift(rhs)};
        };
        add(std::move(c));
    }

    // ---- Section 5: Domb / AZ / W sums ----
    {
        CongruenceCase c;
        c.id = "THM51a";
        c.modulus = 2;
        c.condition = "p = 1 mod 3";
        c.citation = "Theorem 5.1";
        c.residue_ok = [](long p) { return p % 3 == 1; };
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const QuadRep& r = ctx.quad(1, 3, Normalization::positive);
            return {ctx.seq_sum(SeqTag::domb, 16), ctx.seq_sum(SeqTag::domb, 4),
                    ctx.lift(4 * Rat(r.x) * r.x - 2 * ctx.p)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM51b";
        c.modulus = 2;
        c.condition = "p = 2 mod 3";
        c.citation = "Theorem 5.1";
        c.residue_ok = [](long p) { return p % 3 == 2; };
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            return {ctx.seq_sum(SeqTag::domb, 16), ctx.seq_sum(SeqTag::domb, 4),
                    PadicNum::zero(ctx.p)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "LEM51";
        c.status = Status::lemma;
        c.modulus = 2;
        c.condition = "p > 3";
        c.citation = "Lemma 5.1";
        c.fixed_divisors = {{4, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            return {ctx.seq_sum(SeqTag::az, -3), ctx.seq_sum(SeqTag::az, -27),
                    sum_family(ctx, 27, Weight{4, RQ(1)}, true, SumRange::full)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM52";
        c.modulus = 2;
        c.condition = "p = 3 mod 4";
        c.citation = "Theorem 5.2";
        c.residue_ok = [](long p) { return p % 4 == 3; };
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            return {ctx.seq_sum(SeqTag::az, -3), ctx.seq_sum(SeqTag::az, -27),
                    PadicNum::zero(ctx.p)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM53";
        c.modulus = 2;
        c.condition = "p = 1 mod 4 (split mod 12)";
        c.citation = "Theorem 5.3";
        c.residue_ok = [](long p) { return p % 4 == 1; };
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            Rat rhs;
            if (p % 12 == 1) {
                const QuadRep& r = ctx.quad(1, 9, Normalization::positive);
                rhs = 4 * Rat(r.x) * r.x - 2 * p;
            } else {
                const QuadRep& r = ctx.quad(2, 9, Normalization::positive);
                rhs = 2 * Rat(p) - 2 * Rat(r.x) * r.x;
            }
            return {ctx.seq_sum(SeqTag::az, -3), ctx.seq_sum(SeqTag::az, -27), ctx.lift(rhs)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "AUX_CDE";
        c.modulus = 2;
        c.condition = "p = 1 mod 4";
        c.citation = "(5.13)";
        c.residue_ok = [](long p) { return p % 4 == 1; };
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            const QuadRep& r = ctx.quad(1, 1, Normalization::x_mod4_1);
            PadicNum rhs = (ctx.one() + ctx.lift(Rat(p) / 2) * ctx.fermat_q(2)) *
                           (ctx.lift(2 * Rat(r.x)) - ctx.pn(1) / ctx.lift(2 * Rat(r.x)));
            return {ctx.binom((p - 1) / 2, (p - 1) / 4), rhs};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "COR51";
        c.modulus = 1;
        c.condition = "p = 5 mod 12";
        c.citation = "Corollary 5.1";
        c.residue_ok = [](long p) { return p % 12 == 5; };
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const QuadRep& ab = ctx.quad(1, 1, Normalization::AB_pair);
            const QuadRep& x9 = ctx.quad(2, 9, Normalization::positive);
            return {sum_family(ctx, -12288, std::nullopt, false, SumRange::full),
                    ctx.lift(-4 * Rat(ab.x) * ab.y), ctx.lift(-2 * Rat(x9.x) * x9.x)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM54a";
        c.modulus = 2;
        c.condition = "p = 1 mod 3";
        c.citation = "Theorem 5.4";
        c.residue_ok = [](long p) { return p % 3 == 1; };
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const QuadRep& r = ctx.quad(4, 27, Normalization::L_mod3_1);
            Rat rhs = -Rat(r.x) + Rat(ctx.p) / r.x;
            rhs.canonicalize();
            return {ctx.seq_sum(SeqTag::w, -3),
                    sum_family(ctx, 27, Weight{3, RQ(1)}, true, SumRange::third), ctx.lift(rhs)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "THM54b";
        c.modulus = 2;
        c.condition = "p = 2 mod 3";
        c.citation = "Theorem 5.4";
        c.residue_ok = [](long p) { return p % 3 == 2; };
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            auto f = ctx.fact().factorial((p - 2) / 3);
            PadicNum f3 = PadicNum::from_parts(ctx.p, f.v, f.u, ctx.prec);
            f3 = f3 * f3 * f3;
            return {ctx.seq_sum(SeqTag::w, -3),
                    sum_family(ctx, 27, Weight{3, RQ(1)}, true, SumRange::third),
                    ctx.lift(RQ(-p, 3)) * f3};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "W_SUM";
        c.modulus = 2;
        c.condition = "p > 3";
        c.citation = "Theorem 5.4";
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            return {ctx.seq_sum(SeqTag::w, -3),
                    sum_family(ctx, 27, Weight{3, RQ(1)}, true, SumRange::third)};
        };
        add(std::move(c));
    }

    // ---- Conjectures 5.1, 5.2 and the mod p^3 strengthenings ----
    {
        CongruenceCase c;
        c.id = "CONJ51";
        c.status = Status::conjecture;
        c.modulus = 3;
        c.condition = "p > 3 (four cases mod 12)";
        c.citation = "Conjecture 5.1";
        c.fixed_divisors = {{4, RQ(1)}};
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum lhs = sum_family(ctx, 27, Weight{4, RQ(1)}, true, SumRange::full);
            Rat rhs;
            if (p % 12 == 1) {
                const QuadRep& r = ctx.quad(1, 9, Normalization::positive);
                Rat x2 = 4 * Rat(r.x) * r.x;
                rhs = x2 - 2 * p - Rat(p) * p / x2;
            } else if (p % 12 == 5) {
                const QuadRep& r = ctx.quad(2, 9, Normalization::positive);
                Rat x2 = 2 * Rat(r.x) * r.x;
                rhs = 2 * Rat(p) - x2 + Rat(p) * p / x2;
            } else {
                PadicNum cb = ctx.binom(p / 3, p / 12);
                Rat coef = p % 12 == 7 ? RQ(-5, 27) : RQ(5, 54);
                return {lhs, ctx.lift(coef) * ctx.pn(2) / (cb * cb)};
            }
            rhs.canonicalize();
            return {lhs, ctx.lift(rhs)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "CONJ52";
        c.status = Status::conjecture;
        c.modulus = 1;
        c.condition = "p = 1 mod 4 (split mod 12)";
        c.citation = "Conjecture 5.2";
        c.residue_ok = [](long p) { return p % 4 == 1; };
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum lhs = ctx.lift(sgn(p / 12)) * ctx.binom(p / 3, p / 12);
            if (p % 12 == 1) {
                const QuadRep& r = ctx.quad(1, 9, Normalization::x_mod3_1);
                return {lhs, ctx.lift(2 * Rat(r.x))};
            }
            const QuadRep& r = ctx.quad(2, 9, Normalization::x_mod3_1);
            return {lhs, ctx.lift(Rat(r.x))};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "S12_D_CONJ";
        c.status = Status::conjecture;
        c.modulus = 3;
        c.condition = "p > 3 (split mod 3)";
        c.citation = "Conjecture 4.15 of [S12]";
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum s4 = ctx.seq_sum(SeqTag::domb, 4);
            PadicNum s16 = ctx.seq_sum(SeqTag::domb, 16);
            if (p % 3 == 1) {
                const QuadRep& r = ctx.quad(1, 3, Normalization::positive);
                Rat x2 = 4 * Rat(r.x) * r.x;
                Rat rhs = x2 - 2 * p - Rat(p) * p / x2;
                rhs.canonicalize();
                return {s4, s16, ctx.lift(rhs)};
            }
            PadicNum cb = ctx.binom((p - 1) / 2, (p - 5) / 6);
            return {s4, ctx.lift(-2L) * s16, ctx.lift(RQ(1, 2)) * ctx.pn(2) / (cb * cb)};
        };
        add(std::move(c));
    }
    {
        CongruenceCase c;
        c.id = "S12_B_CONJ";
        c.status = Status::conjecture;
        c.modulus = 3;
        c.condition = "p > 3 (four cases mod 12)";
        c.citation = "Conjecture 4.16 of [S12]";
        c.sides = [](EvalContext& ctx, const Params&) -> Sides {
            const long p = ctx.p;
            PadicNum s3 = ctx.seq_sum(SeqTag::az, -3);
            PadicNum s27 = ctx.seq_sum(SeqTag::az, -27);
            if (p % 12 == 1) {
                const QuadRep& r = ctx.quad(1, 9, Normalization::positive);
                Rat x2 = 4 * Rat(r.x) * r.x;
                Rat rhs = x2 - 2 * p - Rat(p) * p / x2;
                rhs.canonicalize();
                return {s3, s27, ctx.lift(rhs)};
            }
            if (p % 12 == 5) {
                const QuadRep& r = ctx.quad(2, 9, Normalization::positive);
                Rat x2 = 2 * Rat(r.x) * r.x;
                Rat rhs = 2 * Rat(p) - x2 + Rat(p) * p / x2;
                rhs.canonicalize();
                return {s3, s27, ctx.lift(rhs)};
            }
            PadicNum cb = ctx.binom(p / 3, p / 12);
            Rat coef = p % 12 == 7 ? RQ(-5, 3) : RQ(5, 6);
            return {s3, ctx.lift(-15L) * s27, ctx.lift(coef) * ctx.pn(2) / (cb * cb)};
        };
        add(std::move(c));
    }

    return reg;
}

} // namespace

const std::vector<CongruenceCase>& registry() {
    static const std::vector<CongruenceCase> reg = build_registry();
    return reg;
}

const CongruenceCase* find_case(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return &c;
    return nullptr;
}

} // namespace supercong
