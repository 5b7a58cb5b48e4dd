// Test-only exact-rational oracle: every value here is computed with plain
// mpq arithmetic and reduced by extended gcd, independent of the p-adic
// module under test.
#pragma once

#include <optional>
#include <vector>

#include "supercong/rational.hpp"

namespace oracle {

using supercong::Int;
using supercong::Rat;

inline long vp(Int n, long p) {
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// canonical residue of a p-integral rational mod p^m
inline Int red(const Rat& x, long p, int m) {
    Int pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    if (x == 0) return 0;
    Int num = x.get_num(), den = x.get_den();
    long vn = vp(num, p), vd = vp(den, p);
    if (vn - vd < 0) throw std::runtime_error("oracle: not p-integral");
    for (long i = 0; i < vn; ++i) num /= p;
    for (long i = 0; i < vd; ++i) den /= p;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t()) == 0)
        throw std::runtime_error("oracle: not invertible");
    Int r = num % pm * inv % pm;
    for (long i = 0; i < vn - vd; ++i) r = r * p % pm;
    if (r < 0) r += pm;
    return r;
}

inline Int binom_int(unsigned long n, unsigned long k) {
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return c;
}

inline Rat genC(const Rat& a, long k) {
    Rat r(1);
    for (long i = 0; i < k; ++i) r *= (a - i) / (i + 1);
    return r;
}

inline Rat H(long n) {
    Rat h(0);
    for (long i = 1; i <= n; ++i) h += Rat(1, i);
    return h;
}

inline Int qp_exact(long a, long p) {  // (a^{p-1}-1)/p as an exact integer
    Int t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(a),
                  static_cast<unsigned long>(p - 1));
    return (t - 1) / p;
}

inline Rat kernel(long family, long k) {
    auto ul = [](long x) { return static_cast<unsigned long>(x); };
    Rat base(family);
    Rat pw(1);
    for (long i = 0; i < k; ++i) pw *= base;
    switch (family) {
        case 16: return Rat(binom_int(ul(2 * k), ul(k)) * binom_int(ul(2 * k), ul(k))) / pw;
        case 27: return Rat(binom_int(ul(2 * k), ul(k)) * binom_int(ul(3 * k), ul(k))) / pw;
        case 64:
        case 128: return Rat(binom_int(ul(2 * k), ul(k)) * binom_int(ul(4 * k), ul(2 * k))) / pw;
        case 432:
        case 864: return Rat(binom_int(ul(3 * k), ul(k)) * binom_int(ul(6 * k), ul(3 * k))) / pw;
        case -12288:
            return Rat(binom_int(ul(2 * k), ul(k)) * binom_int(ul(2 * k), ul(k)) *
                       binom_int(ul(4 * k), ul(2 * k))) /
                   pw;
    }
    throw std::runtime_error("oracle: unknown family");
}

struct OWeight {
    long d;
    Rat e;
};

inline Rat sum_family(long family, long p, const std::optional<OWeight>& w, bool scaled,
                      char range /* f, h, t */) {
    long kmax = range == 'h' ? (p - 1) / 2 : range == 't' ? p / 3 : p - 1;
    Rat tot(0);
    for (long k = 0; k <= kmax; ++k) {
        Rat t = kernel(family, k);
        if (w) t /= w->d * Rat(k) + w->e;
        if (scaled) t *= p;
        tot += t;
    }
    return tot;
}

inline Rat sum_pair(const Rat& a, long p, const std::optional<OWeight>& w, bool scaled) {
    Rat tot(0), c1(1), c2(1);
    for (long k = 0; k < p; ++k) {
        Rat t = c1 * c2;
        if (w) t /= w->d * Rat(k) + w->e;
        if (scaled) t *= p;
        tot += t;
        c1 *= (a - k) / (k + 1);
        c2 *= (-1 - a - k) / (k + 1);
    }
    return tot;
}

// sequence values straight from the defining sums
inline std::vector<Int> domb(long n_max) {
    auto ul = [](long x) { return static_cast<unsigned long>(x); };
    std::vector<Int> out;
    for (long n = 0; n <= n_max; ++n) {
        Int s = 0;
        for (long k = 0; k <= n; ++k)
            s += binom_int(ul(n), ul(k)) * binom_int(ul(n), ul(k)) * binom_int(ul(2 * k), ul(k)) *
                 binom_int(ul(2 * (n - k)), ul(n - k));
        out.push_back(s);
    }
    return out;
}

inline std::vector<Int> az(long n_max) {
    auto ul = [](long x) { return static_cast<unsigned long>(x); };
    std::vector<Int> out;
    for (long n = 0; n <= n_max; ++n) {
        Int s = 0;
        for (long k = 0; 3 * k <= n; ++k) {
            Int pw = 1;
            for (long j = 0; j < n - 3 * k; ++j) pw *= -3;
            s += binom_int(ul(2 * k), ul(k)) * binom_int(ul(3 * k), ul(k)) *
                 binom_int(ul(n), ul(3 * k)) * binom_int(ul(n + k), ul(k)) * pw;
        }
        out.push_back(s);
    }
    return out;
}

inline std::vector<Int> wseq(long n_max) {
    auto ul = [](long x) { return static_cast<unsigned long>(x); };
    std::vector<Int> out;
    for (long n = 0; n <= n_max; ++n) {
        Int s = 0;
        for (long k = 0; 3 * k <= n; ++k) {
            Int pw = 1;
            for (long j = 0; j < n - 3 * k; ++j) pw *= -3;
            s += binom_int(ul(2 * k), ul(k)) * binom_int(ul(3 * k), ul(k)) *
                 binom_int(ul(n), ul(3 * k)) * pw;
        }
        out.push_back(s);
    }
    return out;
}

inline Rat seq_sum(const std::vector<Int>& vals, long base) {
    Rat tot(0), pw(1);
    for (const auto& v : vals) {
        tot += Rat(v) / pw;
        pw *= base;
    }
    return tot;
}

} // namespace oracle
