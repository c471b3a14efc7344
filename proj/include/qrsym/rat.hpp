#ifndef QRSYM_RAT_HPP
#define QRSYM_RAT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <iosfwd>

namespace qrsym {

using Int = mpz_class;

/// Raised when an evaluation hits a zero denominator.  Callers translate
/// this into their own domain violations (well-formedness, weight checks).
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exact rational scalar.  Canonical form is maintained at all times:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1.  Equality is structural.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(static_cast<long int>(n)) {}
    Rat(const Int& n) : q_(n) {}
    Rat(const Int& num, const Int& den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rat(long num, long den) : Rat(Int(num), Int(den)) {}

    /// Parses "p", "p/q" or "-p/q".  Whitespace is not accepted.
    static Rat parse(const std::string& s);

    const Int num() const { return q_.get_num(); }
    const Int den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(mpq_class(q_ / o.q_));
    }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    Rat inverse() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1 / q_));
    }
    Rat abs() const { return q_ < 0 ? -*this : *this; }

    bool operator==(const Rat& o) const { return q_ == o.q_; }
    bool operator!=(const Rat& o) const { return q_ != o.q_; }
    bool operator<(const Rat& o) const { return q_ < o.q_; }
    bool operator<=(const Rat& o) const { return q_ <= o.q_; }
    bool operator>(const Rat& o) const { return q_ > o.q_; }
    bool operator>=(const Rat& o) const { return q_ >= o.q_; }

    /// Renders as "p/q", or "p" when q = 1.
    std::string str() const;

private:
    explicit Rat(const mpq_class& q) : q_(q) {}
    mpq_class q_;  // gmp keeps mpq_class canonical under arithmetic
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat rat_normalize(const Int& num, const Int& den) { return Rat(num, den); }

}  // namespace qrsym

#endif
