#include "qrsym/graded_op.hpp"

#include <sstream>
#include <stdexcept>

namespace qrsym {

// ---------------------------------------------------------------- VermaVec

VermaVec VermaVec::monomial(int n, const Rat& coeff) {
    if (n < 0) throw std::domain_error("VermaVec::monomial: negative degree");
    std::vector<Rat> c(size_t(n) + 1, Rat(0));
    c[size_t(n)] = coeff;
    return VermaVec(std::move(c));
}

VermaVec VermaVec::operator+(const VermaVec& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(int(i)) + o.coeff(int(i));
    return VermaVec(std::move(c));
}

VermaVec VermaVec::operator-(const VermaVec& o) const { return *this + o * Rat(-1); }

VermaVec VermaVec::operator*(const Rat& s) const {
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return VermaVec(std::move(c));
}

std::string VermaVec::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int n = 0; n <= deg(); ++n) {
        Rat c = coeff(n);
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rat a = c.abs();
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string term;
        if (n == 0) {
            term = a.str();
        } else {
            std::string zpow = (n == 1) ? "z" : "z^" + std::to_string(n);
            term = (a == Rat(1)) ? zpow : a.str() + "*" + zpow;
        }
        out += term;
    }
    return out;
}

namespace {

// One term of polynomial text: "[rat][*](z[^k])".
void parse_term(const std::string& t, int sign, std::vector<std::pair<int, Rat>>& out) {
    std::string s = t;
    if (s.empty()) throw std::domain_error("polynomial parse: empty term");
    Rat coeff(1);
    int power = 0;
    auto zpos = s.find('z');
    if (zpos == std::string::npos) {
        coeff = Rat::parse(s);
    } else {
        std::string head = s.substr(0, zpos);
        if (!head.empty() && head.back() == '*') head.pop_back();
        if (!head.empty()) coeff = Rat::parse(head);
        std::string tail = s.substr(zpos + 1);
        if (tail.empty()) {
            power = 1;
        } else if (tail[0] == '^') {
            power = std::stoi(tail.substr(1));
        } else {
            throw std::domain_error("polynomial parse: bad term '" + t + "'");
        }
        if (power < 0) throw std::domain_error("polynomial parse: negative power");
    }
    out.emplace_back(power, sign < 0 ? -coeff : coeff);
}

}  // namespace

VermaVec VermaVec::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::domain_error("polynomial parse: empty input");
    std::vector<std::pair<int, Rat>> terms;
    int sign = 1;
    std::string cur;
    for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if ((ch == '+' || ch == '-') && i > 0 && s[i - 1] != '^' && s[i - 1] != '/' &&
            s[i - 1] != '*' && s[i - 1] != '+' && s[i - 1] != '-') {
            parse_term(cur, sign, terms);
            sign = (ch == '-') ? -1 : 1;
            cur.clear();
        } else if (ch == '-' && i == 0) {
            sign = -1;
        } else if (ch == '+' && i == 0) {
            sign = 1;
        } else {
            cur += ch;
        }
    }
    parse_term(cur, sign, terms);
    int maxdeg = 0;
    for (auto& [p, c] : terms) maxdeg = std::max(maxdeg, p);
    std::vector<Rat> coeffs(size_t(maxdeg) + 1, Rat(0));
    for (auto& [p, c] : terms) coeffs[size_t(p)] += c;
    return VermaVec(std::move(coeffs));
}

// ---------------------------------------------------------------- GradedOp

GradedOp GradedOp::identity() { return fun_xi(RatFun::constant(Rat(1))); }

GradedOp GradedOp::mul_z(int k) {
    if (k < 0) throw std::domain_error("mul_z: negative power");
    if (k == 0) return identity();
    GradedOp op;
    op.insert(k, RatFun::constant(Rat(1)));
    return op;
}

GradedOp GradedOp::diff(int k) {
    if (k < 0) throw std::domain_error("diff: negative order");
    if (k == 0) return identity();
    // Falling factorial nu(nu-1)...(nu-k+1); vanishes on 0..k-1, so the
    // negative shift stays inside C[z].
    Poly p = Poly::constant(Rat(1));
    for (int t = 0; t < k; ++t) p = p * Poly::linear(Rat(-t));
    GradedOp op;
    op.insert(-k, RatFun(p));
    return op;
}

GradedOp GradedOp::fun_xi(const RatFun& f) {
    GradedOp op;
    if (!f.is_zero()) op.insert(0, f);
    op.validate();
    return op;
}

GradedOp GradedOp::single(int d, const RatFun& c) {
    GradedOp op;
    if (!c.is_zero()) op.insert(d, c);
    op.validate();
    return op;
}

RatFun GradedOp::component(int d) const {
    auto it = comp_.find(d);
    return it == comp_.end() ? RatFun() : it->second;
}

void GradedOp::insert(int d, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = comp_.emplace(d, c);
    if (!fresh) {
        RatFun s = it->second + c;
        if (s.is_zero())
            comp_.erase(it);
        else
            it->second = s;
    }
}

void GradedOp::validate() const {
    for (const auto& [d, c] : comp_) {
        if (c.is_zero()) throw WellFormedError("GradedOp: unpruned zero component");
        if (!c.den().nonneg_integer_roots().empty())
            throw WellFormedError("GradedOp: pole at a reachable degree (shift " +
                                  std::to_string(d) + ")");
        if (d < 0)
            for (long n = 0; n < -d; ++n)
                if (!c.eval(Rat(n)).is_zero())
                    throw WellFormedError(
                        "GradedOp: range safety violated at shift " + std::to_string(d) +
                        ", degree " + std::to_string(n));
    }
}

GradedOp GradedOp::operator+(const GradedOp& o) const {
    GradedOp r = *this;
    for (const auto& [d, c] : o.comp_) r.insert(d, c);
    r.validate();
    return r;
}

GradedOp GradedOp::operator-() const { return scale(Rat(-1)); }

GradedOp GradedOp::operator-(const GradedOp& o) const { return *this + (-o); }

GradedOp GradedOp::scale(const Rat& s) const {
    GradedOp r;
    if (s.is_zero()) return r;
    for (const auto& [d, c] : comp_) r.comp_.emplace(d, c * s);
    return r;
}

GradedOp GradedOp::compose(const GradedOp& o) const {
    GradedOp r;
    for (const auto& [d2, c2] : o.comp_)
        for (const auto& [d1, c1] : comp_) r.insert(d1 + d2, c2 * c1.shift_arg(Rat(d2)));
    r.validate();
    return r;
}

VermaVec GradedOp::apply(const VermaVec& v) const {
    std::vector<Rat> out;
    auto bump = [&out](int n, const Rat& val) {
        if (val.is_zero()) return;
        if (int(out.size()) <= n) out.resize(size_t(n) + 1, Rat(0));
        out[size_t(n)] += val;
    };
    for (int n = 0; n <= v.deg(); ++n) {
        Rat vn = v.coeff(n);
        if (vn.is_zero()) continue;
        for (const auto& [d, c] : comp_) {
            Rat cn = c.eval(Rat(n));
            if (n + d < 0) continue;  // range safety guarantees cn = 0 here
            bump(n + d, vn * cn);
        }
    }
    return VermaVec(std::move(out));
}

QMatrix GradedOp::truncate_to_matrix(int N) const {
    if (N < 0) throw std::domain_error("truncate_to_matrix: negative window");
    QMatrix m(N + 1, N + 1);
    for (int n = 0; n <= N; ++n)
        for (const auto& [d, c] : comp_) {
            int row = n + d;
            if (row < 0 || row > N) continue;
            m.at(row, n) = c.eval(Rat(n));
        }
    return m;
}

std::string GradedOp::dump() const {
    if (comp_.empty()) return "zero operator";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : comp_) {
        if (!first) os << "\n";
        os << "shift " << d << ": " << c.str();
        first = false;
    }
    return os.str();
}

GradedOp op_combine(const GradedOp& a, const GradedOp& b, OpCombine op) {
    switch (op) {
        case OpCombine::add: return a + b;
        case OpCombine::sub: return a - b;
        case OpCombine::compose: return a.compose(b);
    }
    throw std::logic_error("op_combine: bad op");
}

}  // namespace qrsym
