#include "qrsym/poly.hpp"

#include <stdexcept>

namespace qrsym {

Poly Poly::operator-() const {
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(int(i)) + o.coeff(int(i));
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
    if (s.is_zero()) return Poly();
    std::vector<Rat> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::shift_arg(const Rat& t) const {
    // Horner in (nu + t).
    Poly acc;
    Poly step = Poly::linear(t);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * step + Poly::constant(c_[i]);
    return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly::divmod: zero divisor");
    Poly r = *this;
    std::vector<Rat> q;
    if (deg() >= d.deg()) q.assign(size_t(deg() - d.deg() + 1), Rat(0));
    Rat dl = d.lead().inverse();
    while (!r.is_zero() && r.deg() >= d.deg()) {
        int k = r.deg() - d.deg();
        Rat f = r.lead() * dl;
        q[size_t(k)] = f;
        std::vector<Rat> sub(size_t(r.deg() + 1), Rat(0));
        for (int i = 0; i <= d.deg(); ++i) sub[size_t(i + k)] = d.coeff(i) * f;
        r = r - Poly(std::move(sub));
    }
    return {Poly(std::move(q)), r};
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return *this * lead().inverse();
}

std::vector<long> Poly::nonneg_integer_roots() const {
    std::vector<long> roots;
    if (is_zero()) throw std::domain_error("nonneg_integer_roots: zero polynomial");
    if (deg() == 0) return roots;

    Poly p = lead().sign() > 0 ? *this : -*this;
    bool all_nonneg = true;
    for (const Rat& c : p.coeffs())
        if (c.sign() < 0) { all_nonneg = false; break; }
    if (all_nonneg && !p.coeff(0).is_zero()) return roots;

    // Cauchy bound: every root has |x| <= 1 + max |a_i / a_d|.
    Rat m(0);
    for (int i = 0; i < p.deg(); ++i) {
        Rat a = (p.coeff(i) / p.lead()).abs();
        if (a > m) m = a;
    }
    Int bound_z = (m.num() / m.den()) + 2;
    if (bound_z > 1000000)
        throw std::domain_error("nonneg_integer_roots: root bound too large");
    long bound = long(bound_z.get_si());
    for (long n = 0; n <= bound; ++n)
        if (p.eval(Rat(n)).is_zero()) roots.push_back(n);
    return roots;
}

std::string Poly::str() const {
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ", ";
        s += c_[i].str();
    }
    if (c_.empty()) s += "0";
    return s + "]";
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = y;
        y = r.monic();  // remainder scale is irrelevant to the gcd
    }
    return x.is_zero() ? Poly() : x.monic();
}

}  // namespace qrsym
