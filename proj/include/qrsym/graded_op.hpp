#ifndef QRSYM_GRADED_OP_HPP
#define QRSYM_GRADED_OP_HPP

#include "qrsym/ratfun.hpp"
#include "qrsym/qmatrix.hpp"

#include <map>
#include <vector>
#include <string>

namespace qrsym {

/// Raised when an operator would violate the well-formedness contract
/// (a reachable pole, or a negative shift that maps some monomial out of
/// the polynomial space).
struct WellFormedError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Element of C[z], coefficient list indexed by the monomial degree.
class VermaVec {
public:
    VermaVec() = default;
    explicit VermaVec(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static VermaVec monomial(int n, const Rat& coeff = Rat(1));

    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int n) const {
        return (n >= 0 && n < static_cast<int>(c_.size())) ? c_[size_t(n)] : Rat(0);
    }

    VermaVec operator+(const VermaVec& o) const;
    VermaVec operator-(const VermaVec& o) const;
    VermaVec operator*(const Rat& s) const;
    bool operator==(const VermaVec& o) const { return c_ == o.c_; }
    bool operator!=(const VermaVec& o) const { return !(*this == o); }

    /// "p/q*z^n + ..." with p/q coefficients; "0" for the zero vector.
    std::string str() const;
    static VermaVec parse(const std::string& text);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/// Graded shift operator on C[z]: a finite sum of components d -> c_d(nu),
/// acting on z^n as sum_d c_d(n) z^{n+d}.  Well-formedness, enforced at
/// every construction:
///   - component denominators have no zeros at integers >= 0;
///   - for d < 0, c_d(n) = 0 for 0 <= n < -d (polynomials map to polynomials);
///   - zero components are pruned.
///
/// Composition multiplies coefficients as rational functions (component
/// (d1,c1) after (d2,c2) contributes shift d1+d2 with c2(nu)*c1(nu+d2)).
/// This is the associative shift-operator algebra; it agrees with applying
/// the factors in sequence whenever no denominator zero at a negative
/// integer is cancelled by a zero of the partner factor.  Components whose
/// denominators have no integer zeros at all never hit that caveat.
class GradedOp {
public:
    GradedOp() = default;

    // -- basic generators ----------------------------------------------
    static GradedOp zero() { return GradedOp(); }
    static GradedOp identity();
    static GradedOp mul_z(int k);   // z^k, k >= 0
    static GradedOp diff(int k);    // d/dz^k, coefficient nu(nu-1)...(nu-k+1)
    static GradedOp fun_xi(const RatFun& f);  // f(xi), xi = z d/dz
    /// Single component at shift d; validates well-formedness.
    static GradedOp single(int d, const RatFun& c);

    bool is_zero() const { return comp_.empty(); }
    const std::map<int, RatFun>& components() const { return comp_; }
    RatFun component(int d) const;
    int min_shift() const { return comp_.empty() ? 0 : comp_.begin()->first; }
    int max_shift() const { return comp_.empty() ? 0 : comp_.rbegin()->first; }

    GradedOp operator+(const GradedOp& o) const;
    GradedOp operator-(const GradedOp& o) const;
    GradedOp operator-() const;
    GradedOp scale(const Rat& s) const;
    /// this after o (apply o first).
    GradedOp compose(const GradedOp& o) const;

    bool operator==(const GradedOp& o) const { return comp_ == o.comp_; }
    bool operator!=(const GradedOp& o) const { return !(*this == o); }

    VermaVec apply(const VermaVec& v) const;

    /// Matrix on the basis {z^0..z^N}, output degrees above N projected out.
    /// Exactness holds on the interior window only: column n is the honest
    /// action iff n + d stays within [0, N] for every shift d present.
    QMatrix truncate_to_matrix(int N) const;

    /// One line per shift: "shift d: <num>/<den>".
    std::string dump() const;

private:
    void insert(int d, const RatFun& c);
    void validate() const;
    std::map<int, RatFun> comp_;
};

inline GradedOp commutator(const GradedOp& a, const GradedOp& b) {
    return a.compose(b) - b.compose(a);
}
inline bool op_equal(const GradedOp& a, const GradedOp& b) { return a == b; }

enum class OpCombine { add, sub, compose };
GradedOp op_combine(const GradedOp& a, const GradedOp& b, OpCombine op);

}  // namespace qrsym

#endif
