#pragma once

#include <gmpxx.h>
#include <string>

#include "supercong/errors.hpp"

namespace supercong {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "n" or "n/d".
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw DomainError("bad rational: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw DomainError("zero denominator: " + s);
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// p-adic valuation of a nonzero integer; strips p-factors into *unit if given.
inline long int_valuation(const Int& n, long p, Int* unit = nullptr) {
    Int u;
    long v = static_cast<long>(mpz_remove(u.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t()));
    if (unit) *unit = u;
    return v;
}

// Valuation of a nonzero rational (may be negative).
inline long rat_valuation(const Rat& r, long p) {
    if (r == 0) throw DomainError("valuation of zero");
    return int_valuation(r.get_num(), p) - int_valuation(r.get_den(), p);
}

inline bool p_integral(const Rat& r, long p) {
    return mpz_divisible_ui_p(r.get_den().get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

inline Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("not invertible");
    return r;
}

} // namespace supercong
