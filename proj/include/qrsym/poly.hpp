#ifndef QRSYM_POLY_HPP
#define QRSYM_POLY_HPP

#include "qrsym/rat.hpp"

#include <vector>
#include <string>
#include <initializer_list>

namespace qrsym {

/// Univariate polynomial in the degree variable nu, dense coefficient list,
/// index i = coefficient of nu^i.  The zero polynomial has an empty list;
/// otherwise the top coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rat& r) { return Poly({r}); }
    static Poly nu() { return Poly({Rat(0), Rat(1)}); }
    /// nu + a
    static Poly linear(const Rat& a) { return Poly({a, Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
    }
    Rat lead() const { return is_zero() ? Rat(0) : c_.back(); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Rat eval(const Rat& x) const;

    /// Substitutes nu -> nu + t.
    Poly shift_arg(const Rat& t) const;

    /// Exact Euclidean division: *this = q*d + r with deg r < deg d.
    /// Throws on zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    Poly monic() const;

    /// All integer roots n >= 0, ascending.  Fast path: if every coefficient
    /// shares the sign of the leading one and the constant term is nonzero,
    /// there are none.  Otherwise scans up to the Cauchy root bound.
    std::vector<long> nonneg_integer_roots() const;

    /// Coefficient-list rendering, e.g. "[1, -3/2, 1]".
    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

Poly gcd(const Poly& a, const Poly& b);  // monic, via Euclid over Q

}  // namespace qrsym

#endif
