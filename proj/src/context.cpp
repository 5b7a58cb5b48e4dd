#include "supercong/context.hpp"

namespace supercong {

EvalContext::EvalContext(long p_, int prec_, SeqCache* cache)
    : p(p_), prec(prec_), pm_(pow_p(p_, prec_)), fact_(p_, prec_), inv_(p_, prec_),
      cache_(cache ? cache : &own_) {
    harm_.emplace_back(0);
}

PadicNum EvalContext::pn(long e) const {
    return PadicNum::from_parts(p, e, Int(1), prec);
}

PadicNum EvalContext::harmonic_num(long n) {
    if (n >= p) throw DomainError("harmonic index >= p");
    if (n >= static_cast<long>(harm_.size())) {
        long have = static_cast<long>(harm_.size()) - 1;
        inv_.ensure(n);
        for (long i = have + 1; i <= n; ++i)
            harm_.push_back((harm_.back() + inv_[i]) % pm_);
    }
    return PadicNum::from_residue(harm_[static_cast<size_t>(n)], p, prec);
}

PadicNum EvalContext::fermat_q(long a) {
    auto it = fq_.find(a);
    if (it == fq_.end()) {
        Int t = pow_residue(Int(a), Int(p - 1), p, prec + 1) - 1;
        it = fq_.emplace(a, t / p % pm_).first;
    }
    return PadicNum::from_residue(it->second, p, prec);
}

PadicNum EvalContext::powmod(long base, const Int& exp) {
    return PadicNum::from_residue(pow_residue(Int(base), exp, p, prec), p, prec);
}

const QuadRep& EvalContext::quad(int multiplier, int d, Normalization norm) {
    auto key = std::make_tuple(multiplier, d, static_cast<int>(norm));
    auto it = quads_.find(key);
    if (it == quads_.end())
        it = quads_.emplace(key, represent(p, FormSpec{multiplier, d, norm})).first;
    return it->second;
}

long EvalContext::cval() {
    if (!cval_) cval_ = c_value(p);
    return *cval_;
}

const std::vector<Int>& EvalContext::seq_residues(SeqTag tag) {
    SeqKey key{static_cast<int>(tag), p, prec};
    auto it = cache_->find(key);
    if (it == cache_->end())
        it = cache_->emplace(key, sequence_mod(tag, p - 1, fact_)).first;
    return it->second;
}

PadicNum EvalContext::seq_sum(SeqTag tag, long base) {
    const auto& vals = seq_residues(tag);
    Int ib = Int(base) % pm_;
    if (ib < 0) ib += pm_;
    ib = mod_inverse(ib, pm_);
    Int w = 1, s = 0;
    for (const auto& v : vals) {
        s = (s + v * w) % pm_;
        w = w * ib % pm_;
    }
    return PadicNum::from_residue(s, p, prec);
}

EvalContext& CtxPool::at(int prec) {
    auto it = ctxs_.find(prec);
    if (it == ctxs_.end())
        it = ctxs_.emplace(prec, std::make_unique<EvalContext>(p_, prec, cache_)).first;
    return *it->second;
}

} // namespace supercong
