#ifndef QRSYM_RATFUN_HPP
#define QRSYM_RATFUN_HPP

#include "qrsym/poly.hpp"

namespace qrsym {

/// Rational function in nu, kept canonical: gcd(num, den) = 1, den monic,
/// zero is 0/1.  Equality is structural, so canonical form doubles as the
/// equality test for every identity check downstream.
class RatFun {
public:
    RatFun() : num_(), den_({Rat(1)}) {}
    RatFun(Poly num, Poly den);
    explicit RatFun(Poly num) : RatFun(std::move(num), Poly::constant(Rat(1))) {}
    static RatFun constant(const Rat& r) { return RatFun(Poly::constant(r)); }
    static RatFun nu() { return RatFun(Poly::nu()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly::constant(Rat(1)) && den_.deg() == 0; }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;  // throws on zero divisor
    RatFun operator*(const Rat& s) const;

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    /// Exact evaluation; throws PoleError when den(x) = 0 (canonical form
    /// rules out a matching zero of the numerator).
    Rat eval(const Rat& x) const;

    /// Substitutes nu -> nu + t.
    RatFun shift_arg(const Rat& t) const { return RatFun(num_.shift_arg(t), den_.shift_arg(t)); }

    /// "<num>/<den>" in coefficient-list rendering.
    std::string str() const { return num_.str() + "/" + den_.str(); }

private:
    Poly num_, den_;
};

enum class RatFunOp { add, sub, mul, div };
RatFun ratfun_arith(const RatFun& a, const RatFun& b, RatFunOp op);

inline Rat ratfun_eval(const RatFun& f, const Rat& x) { return f.eval(x); }

}  // namespace qrsym

#endif
