#include "supercong/engines.hpp"

#include <cassert>

namespace supercong {

namespace {

long kmax_for(SumRange r, long p) {
    switch (r) {
        case SumRange::full: return p - 1;
        case SumRange::half: return (p - 1) / 2;
        case SumRange::third: return p / 3;
    }
    return p - 1;
}

// Divisor values d*k + e = num_k / den with num_k stripped into
// (valuation, unit); unit inverses batch-computed once per sum.
struct DivisorSeq {
    std::vector<long> val;
    std::vector<Int> unit, inv;
    Int den_unit, den_inv;
};

DivisorSeq build_divisor(EvalContext& ctx, const Weight& w, long kmax) {
    const long p = ctx.p;
    const Int& pm = ctx.modulus();
    const Int &enum_ = w.e.get_num(), &eden = w.e.get_den();
    if (mpz_divisible_ui_p(eden.get_mpz_t(), static_cast<unsigned long>(p)))
        throw NotPIntegral("divisor offset " + rat_str(w.e) + " not p-integral");
    DivisorSeq ds;
    ds.val.reserve(static_cast<size_t>(kmax) + 1);
    ds.unit.reserve(static_cast<size_t>(kmax) + 1);
    for (long k = 0; k <= kmax; ++k) {
        Int num = enum_ + k * w.d * eden;
        if (num == 0)
            throw DegenerateParameter("divisor " + std::to_string(w.d) + "k+" + rat_str(w.e) +
                                      " vanishes at k=" + std::to_string(k));
        Int u;
        ds.val.push_back(int_valuation(num, p, &u));
        u %= pm;
        if (u < 0) u += pm;
        ds.unit.push_back(u);
    }
    ds.inv = batch_invert(ds.unit, pm);
    ds.den_unit = eden % pm;
    ds.den_inv = mod_inverse(ds.den_unit, pm);
    return ds;
}

} // namespace

bool divisor_degenerate(long p, long d, const Rat& e, long kmax) {
    if (!p_integral(e, p)) return true;
    if (d % p == 0) {  // every divisor value = e mod p; scan is cheap here
        for (long k = 0; k <= kmax; ++k) {
            Rat g = d * Rat(k) + e;
            if (g == 0 || rat_valuation(g, p) >= 2) return true;
        }
        return false;
    }
    Int k0 = -e.get_num() % p * mod_inverse(e.get_den() % p, Int(p)) % p *
             mod_inverse(Int(((d % p) + p) % p), Int(p)) % p;
    if (k0 < 0) k0 += p;
    if (k0 > kmax) return false;
    Rat g = d * Rat(k0.get_si()) + e;
    return g == 0 || rat_valuation(g, p) >= 2;
}

PadicNum sum_binom_pair(EvalContext& ctx, const Rat& a, const std::optional<Weight>& w,
                        bool times_p, SumRange range) {
    const long p = ctx.p;
    const int prec = ctx.prec;
    const Int& pm = ctx.modulus();
    if (!p_integral(a, p)) throw NotPIntegral("parameter " + rat_str(a) + " not p-integral");
    const long kmax = kmax_for(range, p);

    std::optional<DivisorSeq> ds;
    if (w) ds = build_divisor(ctx, *w, kmax);
    ctx.inverses().ensure(std::min(kmax + 1, p - 1));

    const Int &anum = a.get_num(), &aden = a.get_den();
    Int aden_u = aden % pm;
    if (aden_u < 0) aden_u += pm;
    Int aden_inv2 = mod_inverse(aden_u, pm);
    aden_inv2 = aden_inv2 * aden_inv2 % pm;

    long v = times_p ? 1 : 0;
    Int u = 1;
    if (ds) {
        v -= ds->val[0];
        u = ds->den_unit * ds->inv[0] % pm;
        if (u < 0) u += pm;
        if (u == 0) u = pm;  // unreachable; den_unit is a unit
    }
    PadicNum acc = PadicNum::zero(p);
    for (long k = 0;; ++k) {
        acc = add(acc, PadicNum::from_parts(p, v, u, prec));
        if (k == kmax) break;
        // term ratio (a-k)(-1-a-k)/(k+1)^2 * g_k/g_{k+1}
        Int f1 = anum - k * aden;
        Int f2 = -anum - (k + 1) * aden;
        if (f1 == 0 || f2 == 0) break;  // binomial column is exactly zero from here on
        Int w1, w2;
        v += int_valuation(f1, p, &w1) + int_valuation(f2, p, &w2);
        w1 %= pm;
        if (w1 < 0) w1 += pm;
        w2 %= pm;
        if (w2 < 0) w2 += pm;
        const Int& ik1 = ctx.inverses()[k + 1];
        u = u * w1 % pm * w2 % pm * aden_inv2 % pm * ik1 % pm * ik1 % pm;
        if (ds) {
            v += ds->val[static_cast<size_t>(k)] - ds->val[static_cast<size_t>(k + 1)];
            u = u * ds->unit[static_cast<size_t>(k)] % pm * ds->inv[static_cast<size_t>(k + 1)] % pm;
        }
    }
    return acc;
}

PadicNum sum_family(EvalContext& ctx, long family, const std::optional<Weight>& w,
                    bool times_p, SumRange range) {
    const long p = ctx.p;
    const int prec = ctx.prec;
    const Int& pm = ctx.modulus();
    const long kmax = kmax_for(range, p);

    int stretch;
    switch (family) {
        case 16: stretch = 2; break;
        case 27: stretch = 3; break;
        case 64:
        case 128:
        case -12288: stretch = 4; break;
        case 432:
        case 864: stretch = 6; break;
        default: throw DomainError("unknown kernel family " + std::to_string(family));
    }
    FactTable& fact = ctx.fact();
    fact.ensure(stretch * kmax);

    std::optional<DivisorSeq> ds;
    if (w) ds = build_divisor(ctx, *w, kmax);

    Int fam = Int(family) % pm;
    if (fam < 0) fam += pm;
    const Int fam_inv = mod_inverse(fam, pm);

    Int wpow = 1;
    PadicNum acc = PadicNum::zero(p);
    for (long k = 0; k <= kmax; ++k) {
        long v;
        Int u;
        switch (family) {
            case 16: {
                auto b1 = fact.binom(2 * k, k);
                v = 2 * b1.v;
                u = b1.u * b1.u % pm;
                break;
            }
            case 27: {
                auto b1 = fact.binom(2 * k, k);
                auto b2 = fact.binom(3 * k, k);
                v = b1.v + b2.v;
                u = b1.u * b2.u % pm;
                break;
            }
            case 64:
            case 128: {
                auto b1 = fact.binom(2 * k, k);
                auto b2 = fact.binom(4 * k, 2 * k);
                v = b1.v + b2.v;
                u = b1.u * b2.u % pm;
                break;
            }
            case 432:
            case 864: {
                auto b1 = fact.binom(3 * k, k);
                auto b2 = fact.binom(6 * k, 3 * k);
                v = b1.v + b2.v;
                u = b1.u * b2.u % pm;
                break;
            }
            default: {  // -12288
                auto b1 = fact.binom(2 * k, k);
                auto b2 = fact.binom(4 * k, 2 * k);
                v = 2 * b1.v + b2.v;
                u = b1.u * b1.u % pm * b2.u % pm;
                break;
            }
        }
        u = u * wpow % pm;
        if (times_p) v += 1;
        if (ds) {
            v -= ds->val[static_cast<size_t>(k)];
            u = u * ds->den_unit % pm * ds->inv[static_cast<size_t>(k)] % pm;
        }
        acc = add(acc, PadicNum::from_parts(p, v, u, prec));
        wpow = wpow * fam_inv % pm;
    }
    return acc;
}

PadicNum sum_central(EvalContext& ctx, const Rat& a, const Rat& b) {
    const long p = ctx.p;
    if (!p_integral(a, p) || !p_integral(b, p))
        throw NotPIntegral("S(a,b) parameters must be p-integral");
    Rat q = b + angle(-b, p).angle;
    q.canonicalize();
    if (q == 0 || rat_valuation(q, p) >= 2)
        throw DegenerateParameter("b + <-b>_p = 0 mod p^2 at b=" + rat_str(b));
    return sum_binom_pair(ctx, a, Weight{1, b}, true, SumRange::full);
}

} // namespace supercong
