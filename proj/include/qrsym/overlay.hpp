#ifndef QRSYM_OVERLAY_HPP
#define QRSYM_OVERLAY_HPP

#include "qrsym/composite.hpp"
#include "qrsym/weight.hpp"

#include <string>
#include <vector>

namespace qrsym {

/// Family of subspaces H_1..H_k of an ambient space whose sum spans it.
/// Directness (sum of dims = ambient dim) is recorded; the operator
/// composite below requires it.
class Decomposition {
public:
    Decomposition(int ambient_dim, std::vector<QMatrix> subspaces);
    static Decomposition trivial(int ambient_dim);
    /// Coordinate bands [lo, hi] covering 0..ambient-1.
    static Decomposition bands(int ambient_dim, const std::vector<std::pair<int, int>>& ranges);

    int ambient() const { return ambient_; }
    int count() const { return int(subspaces_.size()); }
    const QMatrix& subspace(int i) const { return subspaces_[size_t(i)]; }
    bool direct() const { return direct_; }

private:
    int ambient_;
    std::vector<QMatrix> subspaces_;
    bool direct_;
};

/// Operator Lie composite LC(H): for each H_i the subalgebra End(H_i)
/// realized inside End(H) as the operators supported on the H_i block of
/// the adapted basis (image inside H_i, vanishing on the complementary
/// summands).  Only direct decompositions are accepted; the source never
/// defines the embedding for a non-direct sum, so such input is rejected
/// with a diagnostic instead of being given invented semantics.
class OperatorComposite {
public:
    explicit OperatorComposite(Decomposition d);

    const Decomposition& decomposition() const { return d_; }
    int pieces() const { return d_.count(); }
    /// dim End(H_i) = (dim H_i)^2.
    int piece_dim(int i) const;
    /// Membership of an ambient operator in the End(H_i) block.
    bool piece_contains(int i, const QMatrix& x) const;

private:
    Decomposition d_;
    QMatrix adapted_;      // columns: concatenated subspace bases
    QMatrix adapted_inv_;
    std::vector<std::pair<int, int>> block_;  // [start, end) per piece
};

inline OperatorComposite build_LC(const Decomposition& d) { return OperatorComposite(d); }

struct OverlayViolation {
    std::string kind;  // "containment" | "bracket" | "glueing"
    int piece;         // composite piece index
    int a, b;          // basis indices involved (b = -1 for containment)
};

struct OverlayReport {
    std::vector<OverlayViolation> violations;
    bool pass() const { return violations.empty(); }
    std::string first_violation() const;
};

/// Definition-4 check of T as an overlay representation: each composite
/// piece maps into its assigned End(H_i) block and restricts there to a Lie
/// homomorphism; intersection elements land in the intersection of the
/// assigned blocks (the instantiated glueing rule).  With the trivial
/// decomposition this degenerates to the plain composed-representation
/// check.
OverlayReport is_overlay_rep(const LieComposite& c, const MatrixRep& T,
                             const OperatorComposite& lc, const std::vector<int>& assignment);

struct WindowCandidateResult {
    std::vector<std::pair<int, int>> bands;  // degree ranges
    bool pass = false;
    std::string first_violation;  // empty when passing
};

struct WindowSearchReport {
    Rat h;
    int N = 0;
    int spin = 2;
    std::vector<WindowCandidateResult> candidates;
    std::string to_json() const;
};

/// Desk-scale search over graded-band decompositions of the degree window
/// {z^0..z^N}: truncates the spin-1 or spin-2 family, and for every band
/// candidate asks whether some piece-to-band assignment satisfies the
/// overlay conditions on the interior of the window.  An empty pass list is
/// a legitimate finding.
WindowSearchReport theorem_1C_window(const WeightParam& w, int N, int spin);

}  // namespace qrsym

#endif
