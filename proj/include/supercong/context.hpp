#pragma once

#include <map>
#include <memory>
#include <optional>

#include "supercong/modtables.hpp"
#include "supercong/numthy.hpp"
#include "supercong/quadforms.hpp"
#include "supercong/sequences.hpp"

namespace supercong {

struct SeqKey {
    int tag;
    long p;
    int prec;
    auto operator<=>(const SeqKey&) const = default;
};

// Per-worker memo for sequence residues; several catalog entries share the
// same Domb / Almkvist-Zudilin / W sums at a given prime.
using SeqCache = std::map<SeqKey, std::vector<Int>>;

/**
 * Everything the evaluators need at one (prime, working precision):
 * factorial tables, unit inverses, harmonic residues, Fermat quotients,
 * quadratic-form representations, sequence sums. Built lazily; owned by one
 * worker (not shared across threads).
 */
class EvalContext {
public:
    EvalContext(long p, int prec, SeqCache* cache = nullptr);

    long p;
    int prec;

    const Int& modulus() const { return pm_; }
    FactTable& fact() { return fact_; }
    UnitInverses& inverses() { return inv_; }

    PadicNum lift(const Rat& r) const { return PadicNum::from_rational(r, p, prec); }
    PadicNum lift(long n) const { return PadicNum::from_integer(Int(n), p, prec); }
    PadicNum one() const { return lift(1L); }
    PadicNum pn(long e) const;  // p^e

    PadicNum binom(long n, long k) { return fact_.binom_padic(n, k); }
    PadicNum harmonic_num(long n);          // H_n, n < p
    PadicNum fermat_q(long a);              // q_p(a), known mod p^prec
    PadicNum powmod(long base, const Int& exp);
    int legendre_sym(long a) const { return legendre(a, p); }

    const QuadRep& quad(int multiplier, int d, Normalization norm);
    long cval();

    const std::vector<Int>& seq_residues(SeqTag tag);
    PadicNum seq_sum(SeqTag tag, long base);  // sum seq[n]/base^n over n < p

private:
    Int pm_;
    FactTable fact_;
    UnitInverses inv_;
    std::vector<Int> harm_;  // residues of H_0..H_k mod p^prec
    std::map<long, Int> fq_;
    std::map<std::tuple<int, int, int>, QuadRep> quads_;
    std::optional<long> cval_;
    SeqCache* cache_;
    SeqCache own_;
};

// Context cache for one prime across the modulus/guard levels in play.
class CtxPool {
public:
    CtxPool(long p, SeqCache* cache = nullptr) : p_(p), cache_(cache) {}
    EvalContext& at(int prec);
    long prime() const { return p_; }

private:
    long p_;
    SeqCache* cache_;
    std::map<int, std::unique_ptr<EvalContext>> ctxs_;
};

} // namespace supercong
