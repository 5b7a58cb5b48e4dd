#pragma once

#include <vector>

#include "supercong/padic.hpp"

namespace supercong {

// a = angle + p * cofactor with angle in [0, p-1]; the paper's <a>_p and
// its companion t = (a - <a>_p)/p (s for the second parameter).
struct AngleDecomposition {
    long angle;
    Rat cofactor;
};

// Requires p not dividing den(a); throws NotPIntegral otherwise.
AngleDecomposition angle(const Rat& a, long p);

// C(a, k) = a(a-1)...(a-k+1)/k! for rational a, via the incremental ratio
// with per-factor valuation extraction.
PadicNum gen_binom(const Rat& a, long k, long p, int prec);

// H_n mod p^m for n < p (every summand is a p-unit). Throws DomainError
// for n >= p.
Int harmonic(long n, long p, int m);

// q_p(a) = (a^{p-1} - 1)/p mod p. Throws DomainError when p | a.
Int fermat_quotient(const Int& a, long p);
Int fermat_quotient(long a, long p);

// U_0 = 1, U_n = -2 sum_{k=1}^{[n/2]} C(n, 2k) U_{n-2k}.
std::vector<Int> u_sequence(long n_max);

// Legendre symbol (a | p).
int legendre(const Int& a, long p);
int legendre(long a, long p);

} // namespace supercong
