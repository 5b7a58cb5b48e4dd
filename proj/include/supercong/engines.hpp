#pragma once

#include <optional>

#include "supercong/context.hpp"

namespace supercong {

enum class SumRange { full, half, third };  // k <= p-1, (p-1)/2, [p/3]

// Divisor d*k + e attached to each summand (e may be rational).
struct Weight {
    long d;
    Rat e;
};

// sum_{k=0}^{kmax} C(a,k) C(-1-a,k) * p^{times_p} / (d k + e), evaluated by
// the incremental term ratio with per-factor valuation extraction.
PadicNum sum_binom_pair(EvalContext& ctx, const Rat& a, const std::optional<Weight>& w,
                        bool times_p, SumRange range);

// Same shape over the central-binomial kernels of (1.2):
//   16 -> C(2k,k)^2/16^k            27 -> C(2k,k)C(3k,k)/27^k
//   64 -> C(2k,k)C(4k,2k)/64^k      432 -> C(3k,k)C(6k,3k)/432^k
//   128, 864 -> the 2^k-shifted variants
//   -12288 -> C(2k,k)^2 C(4k,2k)/(-12288)^k
PadicNum sum_family(EvalContext& ctx, long family, const std::optional<Weight>& w,
                    bool times_p, SumRange range);

// S(a, b) = sum_{k<p} C(a,k) C(-1-a,k) p/(k+b). Enforces the hypothesis
// b + <-b>_p != 0 mod p^2 (throws DegenerateParameter).
PadicNum sum_central(EvalContext& ctx, const Rat& a, const Rat& b);

// True when the divisor d*k+e vanishes mod p^2 (or exactly) for some k in
// range -- the s = -1 mod p degeneracy for b = e/d.
bool divisor_degenerate(long p, long d, const Rat& e, long kmax);

} // namespace supercong
