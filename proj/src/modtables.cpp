#include "supercong/modtables.hpp"

#include <cassert>

namespace supercong {

std::vector<Int> batch_invert(const std::vector<Int>& units, const Int& m) {
    const size_t n = units.size();
    if (n == 0) return {};
    std::vector<Int> prefix(n);
    prefix[0] = units[0] % m;
    for (size_t i = 1; i < n; ++i) prefix[i] = prefix[i - 1] * units[i] % m;
    Int inv = mod_inverse(prefix[n - 1], m);
    std::vector<Int> out(n);
    for (size_t i = n; i-- > 1;) {
        out[i] = inv * prefix[i - 1] % m;
        inv = inv * units[i] % m;
    }
    out[0] = inv % m;
    return out;
}

FactTable::FactTable(long p, int prec) : p_(p), prec_(prec), pm_(pow_p(p, prec)) {
    val_.push_back(0);
    unit_.emplace_back(1);
    inv_unit_.emplace_back(1);
}

void FactTable::ensure(long limit) {
    long have = static_cast<long>(val_.size()) - 1;
    if (limit <= have) return;
    std::vector<Int> fresh;  // p-free parts of have+1 .. limit
    fresh.reserve(static_cast<size_t>(limit - have));
    for (long i = have + 1; i <= limit; ++i) {
        Int w;
        long e = int_valuation(Int(i), p_, &w);
        val_.push_back(val_.back() + e);
        unit_.push_back(unit_.back() * (w % pm_) % pm_);
        fresh.push_back(w % pm_);
    }
    std::vector<Int> invs = batch_invert(fresh, pm_);
    for (size_t j = 0; j < invs.size(); ++j)
        inv_unit_.push_back(inv_unit_.back() * invs[j] % pm_);
}

FactTable::VU FactTable::factorial(long n) {
    ensure(n);
    return {val_[static_cast<size_t>(n)], unit_[static_cast<size_t>(n)]};
}

FactTable::VU FactTable::binom(long n, long k) {
    assert(0 <= k && k <= n);
    ensure(n);
    const auto i = static_cast<size_t>(n), j = static_cast<size_t>(k), l = static_cast<size_t>(n - k);
    return {val_[i] - val_[j] - val_[l],
            unit_[i] * inv_unit_[j] % pm_ * inv_unit_[l] % pm_};
}

PadicNum FactTable::binom_padic(long n, long k) {
    VU b = binom(n, k);
    return PadicNum::from_parts(p_, b.v, b.u, prec_);
}

void UnitInverses::ensure(long limit) {
    long have = static_cast<long>(inv_.size()) - 1;
    if (limit <= have) return;
    assert(limit < p_);
    std::vector<Int> fresh;
    fresh.reserve(static_cast<size_t>(limit - have));
    for (long i = have + 1; i <= limit; ++i) fresh.emplace_back(i);
    std::vector<Int> invs = batch_invert(fresh, pm_);
    inv_.insert(inv_.end(), invs.begin(), invs.end());
}

} // namespace supercong
