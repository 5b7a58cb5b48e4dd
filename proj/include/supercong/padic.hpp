#pragma once

#include <compare>
#include <string>

#include "supercong/rational.hpp"

namespace supercong {

/**
 * Truncated p-adic number: value = p^v * u + O(p^{v+N}) with p not dividing
 * u and u in [1, p^N). Exact zero is a distinguished flag. A third state,
 * the approximate zero, records a value known only to be O(p^v) -- it is
 * what a sum degenerates to when cancellation eats the entire unit range.
 *
 * Values are immutable; all arithmetic returns fresh objects, so sharing
 * across threads is safe.
 */
class PadicNum {
public:
    static PadicNum zero(long p);
    static PadicNum zero_to(long p, long abs_prec);  // O(p^abs_prec)
    static PadicNum from_rational(const Rat& r, long p, int prec);
    static PadicNum from_integer(const Int& n, long p, int prec);
    // Value known only as a residue mod p^prec (an integer in [0, p^prec)).
    static PadicNum from_residue(const Int& r, long p, int prec);
    // Raw parts; u is reduced mod p^prec and must stay a p-unit.
    static PadicNum from_parts(long p, long v, const Int& u, int prec);

    long prime() const { return p_; }
    bool is_exact_zero() const { return exact_zero_; }
    bool is_approx_zero() const { return !exact_zero_ && approx_zero_; }
    bool is_zero_like() const { return exact_zero_ || approx_zero_; }
    long valuation() const;      // exact zero has no valuation (throws)
    const Int& unit() const;     // likewise
    int precision() const;       // N
    long abs_precision() const;  // v + N, or the O(p^a) bound

    // Canonical residue in [0, p^m). Throws NegativeValuation for v < 0 and
    // PrecisionLoss when the value is not pinned mod p^m.
    Int to_residue(int m) const;

    std::string str() const;

    friend PadicNum add(const PadicNum& x, const PadicNum& y);
    friend PadicNum mul(const PadicNum& x, const PadicNum& y);
    friend PadicNum div(const PadicNum& x, const PadicNum& y);
    friend PadicNum neg(const PadicNum& x);

    friend PadicNum operator+(const PadicNum& x, const PadicNum& y) { return add(x, y); }
    friend PadicNum operator-(const PadicNum& x, const PadicNum& y) { return add(x, neg(y)); }
    friend PadicNum operator*(const PadicNum& x, const PadicNum& y) { return mul(x, y); }
    friend PadicNum operator/(const PadicNum& x, const PadicNum& y) { return div(x, y); }
    friend PadicNum operator-(const PadicNum& x) { return neg(x); }

    bool operator==(const PadicNum& o) const = default;

private:
    PadicNum() = default;
    long p_ = 0;
    long v_ = 0;
    Int u_ = 0;
    int n_ = 0;
    bool exact_zero_ = false;
    bool approx_zero_ = false;
};

// p^e with a small thread-local cache (hot in sum loops).
const Int& pow_p(long p, long e);

// a^e mod p^m by square-and-multiply.
Int pow_residue(const Int& a, const Int& e, long p, int m);
Int pow_residue(long a, long e, long p, int m);

} // namespace supercong
