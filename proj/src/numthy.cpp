#include "supercong/numthy.hpp"

#include <cassert>

namespace supercong {

AngleDecomposition angle(const Rat& a, long p) {
    if (!p_integral(a, p))
        throw NotPIntegral("denominator of " + rat_str(a) + " divisible by " + std::to_string(p));
    Int r = a.get_num() % p * mod_inverse(a.get_den() % p, Int(p)) % p;
    if (r < 0) r += p;
    long ang = r.get_si();
    Rat cof = (a - ang) / p;
    cof.canonicalize();
    return {ang, cof};
}

PadicNum gen_binom(const Rat& a, long k, long p, int prec) {
    if (!p_integral(a, p))
        throw NotPIntegral("denominator of " + rat_str(a) + " divisible by " + std::to_string(p));
    PadicNum c = PadicNum::from_integer(1, p, prec);
    for (long i = 0; i < k; ++i) {
        Rat f = (a - i) / (i + 1);
        f.canonicalize();
        if (f == 0) return PadicNum::zero(p);
        c = mul(c, PadicNum::from_rational(f, p, prec));
    }
    return c;
}

Int harmonic(long n, long p, int m) {
    if (n >= p) throw DomainError("harmonic index " + std::to_string(n) + " >= p");
    const Int& pm = pow_p(p, m);
    Int h = 0;
    for (long i = 1; i <= n; ++i) h += mod_inverse(Int(i), pm);
    return h % pm;
}

Int fermat_quotient(const Int& a, long p) {
    if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p)))
        throw DomainError("fermat quotient of a multiple of p");
    Int t = pow_residue(a, Int(p - 1), p, 2) - 1;
    assert(t % p == 0);
    return t / p % p;
}

Int fermat_quotient(long a, long p) { return fermat_quotient(Int(a), p); }

std::vector<Int> u_sequence(long n_max) {
    std::vector<Int> u;
    u.reserve(static_cast<size_t>(n_max) + 1);
    u.emplace_back(1);
    for (long n = 1; n <= n_max; ++n) {
        Int s = 0;
        Int c;
        for (long k = 1; 2 * k <= n; ++k) {
            mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n),
                         static_cast<unsigned long>(2 * k));
            s += c * u[static_cast<size_t>(n - 2 * k)];
        }
        u.push_back(-2 * s);
    }
    return u;
}

int legendre(const Int& a, long p) {
    return mpz_legendre(a.get_mpz_t(), Int(p).get_mpz_t());
}

int legendre(long a, long p) { return legendre(Int(a), p); }

} // namespace supercong
