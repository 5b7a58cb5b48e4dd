#include "supercong/padic.hpp"

#include <cassert>
#include <sstream>
#include <vector>

namespace supercong {

const Int& pow_p(long p, long e) {
    assert(e >= 0);
    struct Cache {
        long p = 0;
        std::vector<Int> pw;
    };
    thread_local Cache c;
    if (c.p != p) {
        c.p = p;
        c.pw.assign(1, Int(1));
    }
    while (static_cast<long>(c.pw.size()) <= e) c.pw.push_back(c.pw.back() * p);
    return c.pw[static_cast<size_t>(e)];
}

PadicNum PadicNum::zero(long p) {
    PadicNum z;
    z.p_ = p;
    z.exact_zero_ = true;
    return z;
}

PadicNum PadicNum::zero_to(long p, long abs_prec) {
    PadicNum z;
    z.p_ = p;
    z.approx_zero_ = true;
    z.v_ = abs_prec;
    return z;
}

PadicNum PadicNum::from_parts(long p, long v, const Int& u, int prec) {
    assert(prec >= 1);
    PadicNum x;
    x.p_ = p;
    x.v_ = v;
    x.n_ = prec;
    x.u_ = u % pow_p(p, prec);
    if (x.u_ < 0) x.u_ += pow_p(p, prec);
    assert(x.u_ != 0 && x.u_ % p != 0);
    return x;
}

PadicNum PadicNum::from_rational(const Rat& r, long p, int prec) {
    if (r == 0) return zero(p);
    Int nu, du;
    long v = int_valuation(r.get_num(), p, &nu) - int_valuation(r.get_den(), p, &du);
    const Int& pm = pow_p(p, prec);
    Int u = (nu % pm) * mod_inverse(du, pm) % pm;
    if (u < 0) u += pm;
    return from_parts(p, v, u, prec);
}

PadicNum PadicNum::from_integer(const Int& n, long p, int prec) {
    if (n == 0) return zero(p);
    Int u;
    long v = int_valuation(n, p, &u);
    return from_parts(p, v, u, prec);
}

PadicNum PadicNum::from_residue(const Int& r, long p, int prec) {
    const Int& pm = pow_p(p, prec);
    Int rr = r % pm;
    if (rr < 0) rr += pm;
    if (rr == 0) return zero_to(p, prec);
    Int u;
    long v = int_valuation(rr, p, &u);
    PadicNum x;
    x.p_ = p;
    x.v_ = v;
    x.n_ = prec - static_cast<int>(v);
    x.u_ = u;
    return x;
}

long PadicNum::valuation() const {
    if (exact_zero_) throw DomainError("exact zero has no finite valuation");
    return v_;
}

const Int& PadicNum::unit() const {
    if (is_zero_like()) throw DomainError("zero has no unit part");
    return u_;
}

int PadicNum::precision() const {
    if (is_zero_like()) throw DomainError("zero has no unit precision");
    return n_;
}

long PadicNum::abs_precision() const {
    if (exact_zero_) throw DomainError("exact zero is known to all precisions");
    return approx_zero_ ? v_ : v_ + n_;
}

Int PadicNum::to_residue(int m) const {
    assert(m >= 1);
    if (exact_zero_) return 0;
    if (approx_zero_) {
        if (v_ < m)
            throw PrecisionLoss("value only known to be O(p^" + std::to_string(v_) +
                                "), residue mod p^" + std::to_string(m) + " undetermined");
        return 0;
    }
    if (v_ < 0)
        throw NegativeValuation("valuation " + std::to_string(v_) + ": not a p-integer");
    if (v_ >= m) return 0;
    if (v_ + n_ < m)
        throw PrecisionLoss("absolute precision " + std::to_string(v_ + n_) +
                            " below requested modulus exponent " + std::to_string(m));
    return u_ % pow_p(p_, m - v_) * pow_p(p_, v_) % pow_p(p_, m);
}

std::string PadicNum::str() const {
    std::ostringstream os;
    if (exact_zero_) {
        os << "0 (exact, p=" << p_ << ")";
    } else if (approx_zero_) {
        os << "O(" << p_ << "^" << v_ << ")";
    } else {
        os << p_ << "^" << v_ << " * " << u_.get_str() << " + O(" << p_ << "^" << v_ + n_ << ")";
    }
    return os.str();
}

PadicNum add(const PadicNum& x, const PadicNum& y) {
    assert(x.p_ == y.p_);
    const long p = x.p_;
    if (x.exact_zero_) return y;
    if (y.exact_zero_) return x;
    const long abs = std::min(x.abs_precision(), y.abs_precision());
    if (x.approx_zero_ && y.approx_zero_) return PadicNum::zero_to(p, abs);
    if (x.approx_zero_ || y.approx_zero_) {
        const PadicNum& r = x.approx_zero_ ? y : x;
        if (r.v_ >= abs) return PadicNum::zero_to(p, abs);
        return PadicNum::from_parts(p, r.v_, r.u_ % pow_p(p, abs - r.v_), static_cast<int>(abs - r.v_));
    }
    const long v0 = std::min(x.v_, y.v_);
    const long k = abs - v0;  // digits available above v0
    if (k <= 0) return PadicNum::zero_to(p, abs);
    const Int& pk = pow_p(p, k);
    Int val = (x.u_ * pow_p(p, x.v_ - v0) + y.u_ * pow_p(p, y.v_ - v0)) % pk;
    if (val == 0) return PadicNum::zero_to(p, abs);
    Int u;
    long d = int_valuation(val, p, &u);
    if (v0 + d >= abs) return PadicNum::zero_to(p, abs);
    return PadicNum::from_parts(p, v0 + d, u, static_cast<int>(abs - v0 - d));
}

PadicNum mul(const PadicNum& x, const PadicNum& y) {
    assert(x.p_ == y.p_);
    const long p = x.p_;
    if (x.exact_zero_ || y.exact_zero_) return PadicNum::zero(p);
    if (x.approx_zero_ || y.approx_zero_) return PadicNum::zero_to(p, x.v_ + y.v_);
    const int n = std::min(x.n_, y.n_);
    return PadicNum::from_parts(p, x.v_ + y.v_, x.u_ * y.u_ % pow_p(p, n), n);
}

PadicNum div(const PadicNum& x, const PadicNum& y) {
    assert(x.p_ == y.p_);
    const long p = x.p_;
    if (y.exact_zero_) throw DivisionByExactZero();
    if (y.approx_zero_)
        throw PrecisionLoss("divisor indistinguishable from zero at this precision");
    if (x.exact_zero_) return PadicNum::zero(p);
    if (x.approx_zero_) return PadicNum::zero_to(p, x.v_ - y.v_);
    const int n = std::min(x.n_, y.n_);
    const Int& pn = pow_p(p, n);
    return PadicNum::from_parts(p, x.v_ - y.v_, x.u_ * mod_inverse(y.u_, pn) % pn, n);
}

PadicNum neg(const PadicNum& x) {
    if (x.is_zero_like()) return x;
    return PadicNum::from_parts(x.p_, x.v_, pow_p(x.p_, x.n_) - x.u_, x.n_);
}

Int pow_residue(const Int& a, const Int& e, long p, int m) {
    assert(e >= 0);
    Int r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), pow_p(p, m).get_mpz_t());
    return r;
}

Int pow_residue(long a, long e, long p, int m) {
    return pow_residue(Int(a), Int(e), p, m);
}

} // namespace supercong
