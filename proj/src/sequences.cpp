#include "supercong/sequences.hpp"

#include <cassert>

namespace supercong {

namespace {

Int bin(unsigned long n, unsigned long k) {
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return c;
}

std::vector<Int> powers(const Int& base, long n) {
    std::vector<Int> pw(static_cast<size_t>(n) + 1);
    pw[0] = 1;
    for (long j = 1; j <= n; ++j) pw[static_cast<size_t>(j)] = pw[static_cast<size_t>(j - 1)] * base;
    return pw;
}

} // namespace

std::vector<Int> sequence_exact(SeqTag tag, SeqFormula formula, long n_max) {
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    const auto ul = [](long x) { return static_cast<unsigned long>(x); };
    if (tag == SeqTag::domb && formula == SeqFormula::definition) {
        for (long n = 0; n <= n_max; ++n) {
            Int s = 0;
            for (long k = 0; k <= n; ++k)
                s += bin(ul(n), ul(k)) * bin(ul(n), ul(k)) * bin(ul(2 * k), ul(k)) *
                     bin(ul(2 * (n - k)), ul(n - k));
            out.push_back(s);
        }
    } else if (tag == SeqTag::domb && formula == SeqFormula::reduced) {
        auto p16 = powers(Int(-16), n_max);
        for (long n = 0; n <= n_max; ++n) {
            Int s = 0;
            for (long k = 0; k <= n; ++k) {
                Int c = bin(ul(2 * k), ul(k));
                s += c * c * bin(ul(3 * k), ul(k)) * bin(ul(n + 2 * k), ul(3 * k)) *
                     p16[static_cast<size_t>(n - k)];
            }
            out.push_back((n % 2 == 0) ? s : -s);
        }
    } else if (tag == SeqTag::az && formula == SeqFormula::definition) {
        auto p3 = powers(Int(-3), n_max);
        for (long n = 0; n <= n_max; ++n) {
            Int s = 0;
            for (long k = 0; 3 * k <= n; ++k)
                s += bin(ul(2 * k), ul(k)) * bin(ul(3 * k), ul(k)) * bin(ul(n), ul(3 * k)) *
                     bin(ul(n + k), ul(k)) * p3[static_cast<size_t>(n - 3 * k)];
            out.push_back(s);
        }
    } else if (tag == SeqTag::az && formula == SeqFormula::reduced) {
        auto p27 = powers(Int(-27), n_max);
        for (long n = 0; n <= n_max; ++n) {
            Int s = 0;
            for (long k = 0; k <= n; ++k) {
                Int c = bin(ul(2 * k), ul(k));
                s += c * c * bin(ul(4 * k), ul(2 * k)) * bin(ul(n + 3 * k), ul(4 * k)) *
                     p27[static_cast<size_t>(n - k)];
            }
            out.push_back(s);
        }
    } else if (tag == SeqTag::az && formula == SeqFormula::reduced_alt) {
        auto p3 = powers(Int(-3), n_max);
        for (long n = 0; n <= n_max; ++n) {
            Int s = 0;
            for (long k = 0; 3 * k <= n; ++k) {
                Int c = bin(ul(2 * k), ul(k));
                s += c * c * bin(ul(4 * k), ul(2 * k)) * bin(ul(n + k), ul(4 * k)) *
                     p3[static_cast<size_t>(n - 3 * k)];
            }
            out.push_back(s);
        }
    } else if (tag == SeqTag::w && formula == SeqFormula::definition) {
        auto p3 = powers(Int(-3), n_max);
        for (long n = 0; n <= n_max; ++n) {
            Int s = 0;
            for (long k = 0; 3 * k <= n; ++k)
                s += bin(ul(2 * k), ul(k)) * bin(ul(3 * k), ul(k)) * bin(ul(n), ul(3 * k)) *
                     p3[static_cast<size_t>(n - 3 * k)];
            out.push_back(s);
        }
    } else {
        throw DomainError("no such formula variant for this sequence");
    }
    return out;
}

std::vector<Int> sequence_mod(SeqTag tag, long n_max, FactTable& fact) {
    const long p = fact.prime();
    const int m = fact.precision();
    const Int& pm = fact.modulus();
    fact.ensure(2 * n_max);

    // residue of a product of valuation/unit binomial parts
    auto emit = [&](long v, const Int& u) -> Int {
        if (v >= m) return Int(0);
        return pow_p(p, v) * u % pm;
    };

    std::vector<Int> pw3;  // (-3)^j mod p^m
    if (tag != SeqTag::domb) {
        pw3.resize(static_cast<size_t>(n_max) + 1);
        pw3[0] = 1;
        Int m3 = (pm - 3) % pm;
        for (long j = 1; j <= n_max; ++j) pw3[static_cast<size_t>(j)] = pw3[static_cast<size_t>(j - 1)] * m3 % pm;
    }

    std::vector<Int> out(static_cast<size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) {
        Int s = 0;
        if (tag == SeqTag::domb) {
            for (long k = 0; k <= n; ++k) {
                auto a = fact.binom(n, k);
                auto b = fact.binom(2 * k, k);
                auto c = fact.binom(2 * (n - k), n - k);
                long v = 2 * a.v + b.v + c.v;
                if (v >= m) continue;
                s += emit(v, a.u * a.u % pm * b.u % pm * c.u % pm);
            }
        } else if (tag == SeqTag::az) {
            for (long k = 0; 3 * k <= n; ++k) {
                auto a = fact.binom(2 * k, k);
                auto b = fact.binom(3 * k, k);
                auto c = fact.binom(n, 3 * k);
                auto d = fact.binom(n + k, k);
                long v = a.v + b.v + c.v + d.v;
                if (v >= m) continue;
                s += emit(v, a.u * b.u % pm * c.u % pm * d.u % pm) *
                     pw3[static_cast<size_t>(n - 3 * k)] % pm;
            }
        } else {
            for (long k = 0; 3 * k <= n; ++k) {
                auto a = fact.binom(2 * k, k);
                auto b = fact.binom(3 * k, k);
                auto c = fact.binom(n, 3 * k);
                long v = a.v + b.v + c.v;
                if (v >= m) continue;
                s += emit(v, a.u * b.u % pm * c.u % pm) * pw3[static_cast<size_t>(n - 3 * k)] % pm;
            }
        }
        out[static_cast<size_t>(n)] = s % pm;
    }
    return out;
}

std::vector<Int> sequence_mod(SeqTag tag, long n_max, long p, int m) {
    FactTable fact(p, m);
    return sequence_mod(tag, n_max, fact);
}

} // namespace supercong
