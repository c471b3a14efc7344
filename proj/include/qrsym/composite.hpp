#ifndef QRSYM_COMPOSITE_HPP
#define QRSYM_COMPOSITE_HPP

#include "qrsym/qmatrix.hpp"

#include <string>
#include <vector>
#include <optional>

namespace qrsym {

/// One distinguished subspace of a Lie composite: an ambient-coordinate
/// basis (columns) plus structure constants on that basis,
/// [x_a, x_b] = sum_t c[a][b][t] x_t.
struct CompositePiece {
    std::string name;
    QMatrix basis;  // ambient_dim x piece_dim
    std::vector<std::vector<std::vector<Rat>>> bracket;

    int dim() const { return basis.cols(); }
    /// [x_a, x_b] as an ambient vector.
    std::vector<Rat> bracket_ambient(int a, int b) const;
};

struct CompositeCheck {
    bool compatible = false;
    bool dense = false;
    bool connected = false;
    bool all() const { return compatible && dense && connected; }
};

/// Finite-dimensional linear space with distinguished subspaces carrying
/// compatible Lie brackets.  Constructors validate: every piece has dim > 1,
/// piece brackets are antisymmetric and satisfy Jacobi, and the brackets
/// induced on pairwise intersections agree.  Connectivity reads the
/// intersection condition as "nonzero subspace" (as a set of vectors any two
/// subspaces share 0, which would make the condition vacuous).
class LieComposite {
public:
    LieComposite(int dim, std::vector<std::string> labels, std::vector<CompositePiece> pieces);

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<CompositePiece>& pieces() const { return pieces_; }

    CompositeCheck check() const;

    /// Labels, piece bases as p/q grids, and structure constants.
    std::string to_json() const;

private:
    int dim_;
    std::vector<std::string> labels_;
    std::vector<CompositePiece> pieces_;
};

CompositeCheck composite_check(const LieComposite& c);

/// Assignment of an exact matrix to every ambient basis label, extended
/// linearly.
struct MatrixRep {
    int target_dim = 0;
    std::vector<QMatrix> images;  // one per ambient basis vector

    QMatrix apply(const std::vector<Rat>& ambient) const;
    static MatrixRep zero(int ambient_dim, int target_dim);
};

struct RepViolation {
    int piece;
    int a, b;  // piece basis indices
};

struct RepReport {
    std::vector<RepViolation> violations;
    bool pass() const { return violations.empty(); }
};

/// Per-piece homomorphism check: [T(x), T(y)] = T([x, y]) exactly for every
/// basis pair of every piece.
RepReport check_representation(const LieComposite& c, const MatrixRep& T);

/// The octahedron composite: six vertex labels A..F, four face pieces
/// (ABC), (ADE), (CDF), (EBF), each carrying cyclic so(3) constants
/// [X,Y] = Z in the listed vertex order.  Pairwise intersections are the
/// shared vertex spans.
LieComposite octahedron();

/// Vertex pairs not sharing any face piece (the opposite vertices).
std::vector<std::pair<int, int>> octahedron_opposite_pairs();

/// A 4x4 exact representation of the octahedron composite whose shifted
/// image spans so(4).  Solved, not copied: the vertex images are drawn from
/// two commuting su(2) triples (one direction per opposite pair), and the
/// sign assignment is the first one closing all four faces with six
/// linearly independent images.
MatrixRep octahedron_so4_model();

struct PropositionReport {
    bool centrality_ok = false;
    std::vector<std::pair<int, int>> non_central_pairs;
    bool irreducible = false;
    bool lambdas_found = false;
    std::vector<Rat> lambdas;  // one per vertex when found
    bool so4_relations_ok = false;
    std::string failure;

    bool pass() const { return centrality_ok && irreducible && lambdas_found && so4_relations_ok; }
};

/// Checks the octahedron Proposition data for a vertex assignment T:
///  (a) opposite-pair commutators commute with all six vertex operators;
///  (b) if the six operators act Burnside-irreducibly, scalars lambda_v are
///      extracted from the face closures (T(Z) - [T(X),T(Y)] must be scalar,
///      consistently across the two faces through Z), and the shifted
///      operators are verified to satisfy the full so(4) relation table:
///      every face closes cyclically and opposite-pair commutators vanish.
PropositionReport verify_octahedron_proposition(const MatrixRep& T);

/// Leibniz tensor product x -> T1(x) (x) 1 + 1 (x) T2(x).
MatrixRep tensor_rep(const MatrixRep& t1, const MatrixRep& t2);

}  // namespace qrsym

#endif
