#pragma once

#include <vector>

#include "supercong/padic.hpp"

namespace supercong {

// Inverts a vector of p-units mod m with one modular inversion (Montgomery
// batch trick).
std::vector<Int> batch_invert(const std::vector<Int>& units, const Int& m);

/**
 * Factorials mod p^prec with the p-part split off: i! = p^val[i] * unit[i]
 * where unit[i] is the residue mod p^prec of the p-free part. Any binomial
 * coefficient of nonnegative arguments then costs two modular multiplies.
 */
class FactTable {
public:
    FactTable(long p, int prec);

    void ensure(long limit);

    struct VU {
        long v;
        Int u;  // p-unit mod p^prec
    };

    VU factorial(long n);
    VU binom(long n, long k);  // 0 <= k <= n
    PadicNum binom_padic(long n, long k);

    long prime() const { return p_; }
    int precision() const { return prec_; }
    const Int& modulus() const { return pm_; }

private:
    long p_;
    int prec_;
    Int pm_;
    std::vector<long> val_;
    std::vector<Int> unit_, inv_unit_;
};

// Inverses of 1..limit mod p^prec (limit < p so every entry is a unit).
class UnitInverses {
public:
    UnitInverses(long p, int prec) : p_(p), pm_(pow_p(p, prec)) { inv_.push_back(0); }
    void ensure(long limit);
    const Int& operator[](long i) const { return inv_[static_cast<size_t>(i)]; }

private:
    long p_;
    Int pm_;
    std::vector<Int> inv_;
};

} // namespace supercong
