#include "qrsym/ratfun.hpp"

#include <stdexcept>

namespace qrsym {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(Rat(1));
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.deg() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rat lc = den_.lead().inverse();
    num_ = num_ * lc;
    den_ = den_ * lc;
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw std::domain_error("RatFun: division by zero");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::operator*(const Rat& s) const {
    RatFun r;
    if (s.is_zero()) return r;
    r.num_ = num_ * s;
    r.den_ = den_;
    return r;
}

Rat RatFun::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d.is_zero()) throw PoleError("RatFun: pole at " + x.str());
    return num_.eval(x) / d;
}

RatFun ratfun_arith(const RatFun& a, const RatFun& b, RatFunOp op) {
    switch (op) {
        case RatFunOp::add: return a + b;
        case RatFunOp::sub: return a - b;
        case RatFunOp::mul: return a * b;
        case RatFunOp::div: return a / b;
    }
    throw std::logic_error("ratfun_arith: bad op");
}

}  // namespace qrsym
