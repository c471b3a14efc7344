#ifndef QRSYM_WITT_WINDOW_HPP
#define QRSYM_WITT_WINDOW_HPP

#include "qrsym/witt_family.hpp"
#include "qrsym/qmatrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qrsym {

/// Label of a truncated-basis element: e_i, or f_i when extended.
struct WittLabel {
    char family;  // 'e' or 'f'
    int index;
    bool operator==(const WittLabel& o) const {
        return family == o.family && index == o.index;
    }
    std::string str() const { return std::string(1, family) + "_" + std::to_string(index); }
};

/// Truncation of the Witt composite (extended or not) to indices |i| <= K.
/// The truncated pieces are not bracket-closed, so this is deliberately not
/// a LieComposite: the bracket is partial, defined only for window-closed
/// pairs (|i+j| <= K), and every check quantifies over those pairs only.
/// That window contract is part of the object.
class TruncatedWittComposite {
public:
    TruncatedWittComposite(int K, bool extended);

    int K() const { return K_; }
    bool extended() const { return extended_; }
    const std::vector<WittLabel>& basis() const { return basis_; }

    bool window_closed(int i, int j) const { return std::abs(i + j) <= K_; }
    /// Piece membership; piece is +1 or -1.
    bool in_piece(const WittLabel& x, int piece) const;

    /// Bracket of two basis labels when window-closed and both arguments lie
    /// in a common piece where the relation is defined; the result is a
    /// scalar multiple of a single basis label ([e,e] and [e,f]) or zero.
    struct BracketTerm {
        Rat coeff;
        WittLabel label;  // meaningless when coeff = 0
    };
    std::optional<BracketTerm> bracket(const WittLabel& x, const WittLabel& y) const;

    /// dense / connected / compatible in the window-closed sense.
    bool dense() const { return true; }  // pieces jointly contain every basis label
    bool connected() const { return true; }  // both pieces contain e_{-1}, e_0, e_1
    /// e-labels in the piece intersection: span{e_{-1}, e_0, e_1} (+ f_0).
    std::vector<WittLabel> piece_intersection() const;

private:
    int K_;
    bool extended_;
    std::vector<WittLabel> basis_;
};

/// Exact matrices of the composed-representation family on the window
/// {z^0..z^N}: label -> truncate_to_matrix(rho(e_i) / phi(f_i), N).
std::map<std::string, QMatrix> window_matrices(const TruncatedWittComposite& c,
                                               const WittIndexMap& rho, int N);

struct WindowCheckViolation {
    WittLabel x, y;
    int column;  // window column where the relation first fails
};

struct WindowCheckReport {
    int N = 0;
    int checked_pairs = 0;
    std::vector<WindowCheckViolation> violations;
    bool pass() const { return violations.empty(); }
};

/// Verifies the bracket relations of the truncated composite on the matrix
/// family, restricted to interior columns: column n is compared only when
/// n and every intermediate degree reached by the pair stay inside [0, N].
WindowCheckReport window_rep_check(const TruncatedWittComposite& c, const WittIndexMap& rho,
                                   int N);

/// Same check for the Leibniz tensor of two window families (weights may
/// differ; the composite bracket must be shared, i.e. same K and flag).
/// Columns are pairs (n1, n2), interior in each factor.
WindowCheckReport tensor_window_rep_check(const TruncatedWittComposite& c,
                                          const WittIndexMap& rho1, int N1,
                                          const WittIndexMap& rho2, int N2);

}  // namespace qrsym

#endif
