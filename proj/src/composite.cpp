#include "qrsym/composite.hpp"
#include "qrsym/burnside.hpp"

#include "json.hpp"

#include <stdexcept>
#include <numeric>

namespace qrsym {

std::vector<Rat> CompositePiece::bracket_ambient(int a, int b) const {
    std::vector<Rat> out(size_t(basis.rows()), Rat(0));
    const auto& coords = bracket[size_t(a)][size_t(b)];
    for (int t = 0; t < dim(); ++t) {
        if (coords[size_t(t)].is_zero()) continue;
        for (int r = 0; r < basis.rows(); ++r)
            out[size_t(r)] += basis.at(r, t) * coords[size_t(t)];
    }
    return out;
}

namespace {

std::vector<Rat> bracket_coords(const CompositePiece& p, const std::vector<Rat>& x,
                                const std::vector<Rat>& y) {
    // Bilinear extension of the structure constants to coordinate vectors.
    std::vector<Rat> out(size_t(p.dim()), Rat(0));
    for (int a = 0; a < p.dim(); ++a) {
        if (x[size_t(a)].is_zero()) continue;
        for (int b = 0; b < p.dim(); ++b) {
            if (y[size_t(b)].is_zero()) continue;
            Rat f = x[size_t(a)] * y[size_t(b)];
            for (int t = 0; t < p.dim(); ++t)
                out[size_t(t)] += p.bracket[size_t(a)][size_t(b)][size_t(t)] * f;
        }
    }
    return out;
}

// Coordinates of ambient vector v in the column basis of p (if any).
std::optional<std::vector<Rat>> coords_in_piece(const CompositePiece& p,
                                                const std::vector<Rat>& v) {
    int n = p.basis.rows(), k = p.dim();
    QMatrix aug(n, k + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) aug.at(i, j) = p.basis.at(i, j);
        aug.at(i, k) = v[size_t(i)];
    }
    QMatrix ns = aug.nullspace();
    for (int c = 0; c < ns.cols(); ++c) {
        if (ns.at(k, c).is_zero()) continue;
        Rat scale = -ns.at(k, c).inverse();
        std::vector<Rat> coords(static_cast<size_t>(k), Rat(0));
        for (int j = 0; j < k; ++j) coords[size_t(j)] = ns.at(j, c) * scale;
        return coords;
    }
    return std::nullopt;
}

std::vector<Rat> piece_bracket_of_ambient(const CompositePiece& p, const std::vector<Rat>& x,
                                          const std::vector<Rat>& y) {
    auto cx = coords_in_piece(p, x);
    auto cy = coords_in_piece(p, y);
    if (!cx || !cy)
        throw std::domain_error("LieComposite: vector not inside the piece");
    std::vector<Rat> coords = bracket_coords(p, *cx, *cy);
    std::vector<Rat> out(size_t(p.basis.rows()), Rat(0));
    for (int t = 0; t < p.dim(); ++t)
        for (int r = 0; r < p.basis.rows(); ++r)
            out[size_t(r)] += p.basis.at(r, t) * coords[size_t(t)];
    return out;
}

}  // namespace

LieComposite::LieComposite(int dim, std::vector<std::string> labels,
                           std::vector<CompositePiece> pieces)
    : dim_(dim), labels_(std::move(labels)), pieces_(std::move(pieces)) {
    if (int(labels_.size()) != dim_)
        throw std::domain_error("LieComposite: label count != dim");
    for (const auto& p : pieces_) {
        if (p.dim() <= 1) throw std::domain_error("LieComposite: piece of dim <= 1");
        if (p.basis.rows() != dim_)
            throw std::domain_error("LieComposite: piece basis has wrong ambient dim");
        if (p.basis.rank() != p.dim())
            throw std::domain_error("LieComposite: piece basis not independent");
        int k = p.dim();
        if (int(p.bracket.size()) != k)
            throw std::domain_error("LieComposite: bracket table shape");
        for (const auto& row : p.bracket) {
            if (int(row.size()) != k) throw std::domain_error("LieComposite: bracket table shape");
            for (const auto& cell : row)
                if (int(cell.size()) != k)
                    throw std::domain_error("LieComposite: bracket table shape");
        }
        // Antisymmetry.
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                for (int t = 0; t < k; ++t)
                    if (p.bracket[size_t(a)][size_t(b)][size_t(t)] !=
                        -p.bracket[size_t(b)][size_t(a)][size_t(t)])
                        throw std::domain_error("LieComposite: bracket not antisymmetric in piece " +
                                                p.name);
        // Jacobi on basis triples.
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                for (int c = b + 1; c < k; ++c) {
                    std::vector<Rat> ea(size_t(k), Rat(0)), eb(size_t(k), Rat(0)),
                        ec(size_t(k), Rat(0));
                    ea[size_t(a)] = Rat(1);
                    eb[size_t(b)] = Rat(1);
                    ec[size_t(c)] = Rat(1);
                    auto j1 = bracket_coords(p, bracket_coords(p, ea, eb), ec);
                    auto j2 = bracket_coords(p, bracket_coords(p, eb, ec), ea);
                    auto j3 = bracket_coords(p, bracket_coords(p, ec, ea), eb);
                    for (int t = 0; t < k; ++t)
                        if (!(j1[size_t(t)] + j2[size_t(t)] + j3[size_t(t)]).is_zero())
                            throw std::domain_error("LieComposite: Jacobi fails in piece " + p.name);
                }
    }
    if (!check().compatible)
        throw std::domain_error("LieComposite: piece brackets disagree on an intersection");
}

CompositeCheck LieComposite::check() const {
    CompositeCheck out;

    // dense: the union of piece subspaces spans the ambient space.
    {
        int total_cols = 0;
        for (const auto& p : pieces_) total_cols += p.dim();
        QMatrix all(dim_, total_cols);
        int c0 = 0;
        for (const auto& p : pieces_) {
            for (int i = 0; i < dim_; ++i)
                for (int j = 0; j < p.dim(); ++j) all.at(i, c0 + j) = p.basis.at(i, j);
            c0 += p.dim();
        }
        out.dense = (all.rank() == dim_);
    }

    // connected: the graph with an edge for every nonzero pairwise
    // intersection is connected.
    {
        size_t n = pieces_.size();
        std::vector<size_t> parent(n);
        std::iota(parent.begin(), parent.end(), size_t(0));
        auto find = [&parent](size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                QMatrix inter = column_space_intersection(pieces_[i].basis, pieces_[j].basis);
                if (inter.cols() > 0) parent[find(i)] = find(j);
            }
        out.connected = true;
        for (size_t i = 1; i < n; ++i)
            if (find(i) != find(0)) out.connected = false;
        if (n == 0) out.connected = false;
    }

    // compatible: induced brackets agree on every pairwise intersection
    // (and the intersection is closed under them, so "induced structure"
    // is meaningful).
    out.compatible = true;
    for (size_t i = 0; i < pieces_.size() && out.compatible; ++i)
        for (size_t j = i + 1; j < pieces_.size() && out.compatible; ++j) {
            QMatrix inter = column_space_intersection(pieces_[i].basis, pieces_[j].basis);
            for (int a = 0; a < inter.cols() && out.compatible; ++a)
                for (int b = 0; b < inter.cols() && out.compatible; ++b) {
                    auto x = inter.col(a);
                    auto y = inter.col(b);
                    auto bi = piece_bracket_of_ambient(pieces_[i], x, y);
                    auto bj = piece_bracket_of_ambient(pieces_[j], x, y);
                    if (bi != bj) out.compatible = false;
                    if (inter.cols() > 0 && !in_column_span(inter, bi)) out.compatible = false;
                }
        }
    return out;
}

CompositeCheck composite_check(const LieComposite& c) { return c.check(); }

std::string LieComposite::to_json() const {
    nlohmann::json out;
    out["dim"] = dim_;
    out["labels"] = labels_;
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& p : pieces_) {
        nlohmann::json jp;
        jp["name"] = p.name;
        nlohmann::json basis = nlohmann::json::array();
        for (int i = 0; i < dim_; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < p.dim(); ++j) row.push_back(p.basis.at(i, j).str());
            basis.push_back(row);
        }
        jp["basis"] = basis;
        nlohmann::json br = nlohmann::json::array();
        for (const auto& row : p.bracket) {
            nlohmann::json jrow = nlohmann::json::array();
            for (const auto& cell : row) {
                nlohmann::json jcell = nlohmann::json::array();
                for (const auto& x : cell) jcell.push_back(x.str());
                jrow.push_back(jcell);
            }
            br.push_back(jrow);
        }
        jp["bracket"] = br;
        pieces.push_back(jp);
    }
    out["pieces"] = pieces;
    return out.dump(2);
}

// ------------------------------------------------------------- MatrixRep

QMatrix MatrixRep::apply(const std::vector<Rat>& ambient) const {
    QMatrix out(target_dim, target_dim);
    for (size_t i = 0; i < images.size(); ++i) {
        if (ambient[i].is_zero()) continue;
        out = out + images[i].scale(ambient[i]);
    }
    return out;
}

MatrixRep MatrixRep::zero(int ambient_dim, int target_dim) {
    MatrixRep T;
    T.target_dim = target_dim;
    T.images.assign(size_t(ambient_dim), QMatrix(target_dim, target_dim));
    return T;
}

RepReport check_representation(const LieComposite& c, const MatrixRep& T) {
    if (int(T.images.size()) != c.dim())
        throw std::domain_error("check_representation: image count != ambient dim");
    RepReport rep;
    for (size_t pi = 0; pi < c.pieces().size(); ++pi) {
        const auto& p = c.pieces()[pi];
        std::vector<QMatrix> tx(size_t(p.dim()));
        for (int a = 0; a < p.dim(); ++a) tx[size_t(a)] = T.apply(p.basis.col(a));
        for (int a = 0; a < p.dim(); ++a)
            for (int b = a + 1; b < p.dim(); ++b) {
                QMatrix lhs = mat_commutator(tx[size_t(a)], tx[size_t(b)]);
                QMatrix rhs = T.apply(p.bracket_ambient(a, b));
                if (lhs != rhs) rep.violations.push_back({int(pi), a, b});
            }
    }
    return rep;
}

// ------------------------------------------------------------- octahedron

namespace {

constexpr int kVertexA = 0, kVertexB = 1, kVertexC = 2, kVertexD = 3, kVertexE = 4,
              kVertexF = 5;

const int kFaces[4][3] = {
    {kVertexA, kVertexB, kVertexC},
    {kVertexA, kVertexD, kVertexE},
    {kVertexC, kVertexD, kVertexF},
    {kVertexE, kVertexB, kVertexF},
};
const char* kFaceNames[4] = {"ABC", "ADE", "CDF", "EBF"};

std::vector<std::vector<std::vector<Rat>>> cyclic_so3() {
    // [x0,x1] = x2 cyclically.
    std::vector<std::vector<std::vector<Rat>>> br(
        3, std::vector<std::vector<Rat>>(3, std::vector<Rat>(3, Rat(0))));
    for (int a = 0; a < 3; ++a) {
        int b = (a + 1) % 3, t = (a + 2) % 3;
        br[size_t(a)][size_t(b)][size_t(t)] = Rat(1);
        br[size_t(b)][size_t(a)][size_t(t)] = Rat(-1);
    }
    return br;
}

}  // namespace

LieComposite octahedron() {
    std::vector<std::string> labels = {"A", "B", "C", "D", "E", "F"};
    std::vector<CompositePiece> pieces;
    for (int f = 0; f < 4; ++f) {
        CompositePiece p;
        p.name = kFaceNames[f];
        p.basis = QMatrix(6, 3);
        for (int j = 0; j < 3; ++j) p.basis.at(kFaces[f][j], j) = Rat(1);
        p.bracket = cyclic_so3();
        pieces.push_back(std::move(p));
    }
    return LieComposite(6, std::move(labels), std::move(pieces));
}

std::vector<std::pair<int, int>> octahedron_opposite_pairs() {
    // Vertices sharing no face piece.
    return {{kVertexA, kVertexF}, {kVertexB, kVertexD}, {kVertexC, kVertexE}};
}

MatrixRep octahedron_so4_model() {
    // Two commuting su(2) triples inside 4x4 matrices: rotations
    // L_i = (E_{kj} - E_{jk}) on the 123 block and boosts B_i = E_{i4} - E_{4i},
    // combined as J = (L+B)/2, K = (L-B)/2.
    auto skew = [](int a, int b) {
        QMatrix m(4, 4);
        m.at(a, b) = Rat(1);
        m.at(b, a) = Rat(-1);
        return m;
    };
    QMatrix L[3] = {skew(2, 1), skew(0, 2), skew(1, 0)};
    QMatrix B[3] = {skew(0, 3), skew(1, 3), skew(2, 3)};
    Rat half(1, 2);
    QMatrix J[3], Kk[3];
    for (int i = 0; i < 3; ++i) {
        J[i] = (L[i] + B[i]).scale(half);
        Kk[i] = (L[i] - B[i]).scale(half);
    }

    // Vertex -> su(2) direction: one axis per opposite pair.
    auto pairs = octahedron_opposite_pairs();
    int axis[6];
    for (size_t ax = 0; ax < pairs.size(); ++ax) {
        axis[pairs[ax].first] = int(ax);
        axis[pairs[ax].second] = int(ax);
    }

    LieComposite oct = octahedron();
    // Enumerate the sign assignment T(v) = s_v J_axis + t_v K_axis; take the
    // first one that closes every face and spans six dimensions.
    for (int smask = 0; smask < 64; ++smask)
        for (int tmask = 0; tmask < 64; ++tmask) {
            MatrixRep T;
            T.target_dim = 4;
            T.images.resize(6);
            for (int v = 0; v < 6; ++v) {
                Rat s = (smask >> v) & 1 ? Rat(-1) : Rat(1);
                Rat t = (tmask >> v) & 1 ? Rat(-1) : Rat(1);
                T.images[size_t(v)] = J[axis[v]].scale(s) + Kk[axis[v]].scale(t);
            }
            if (!check_representation(oct, T).pass()) continue;
            QMatrix flat(16, 6);
            for (int v = 0; v < 6; ++v) {
                auto f = T.images[size_t(v)].flatten();
                for (int r = 0; r < 16; ++r) flat.at(r, v) = f[size_t(r)];
            }
            if (flat.rank() == 6) return T;
        }
    throw std::logic_error("octahedron_so4_model: no sign assignment closes the faces");
}

// ------------------------------------------------- Proposition verification

PropositionReport verify_octahedron_proposition(const MatrixRep& T) {
    PropositionReport out;
    if (T.images.size() != 6)
        throw std::domain_error("verify_octahedron_proposition: need six vertex operators");
    LieComposite oct = octahedron();
    auto pairs = octahedron_opposite_pairs();

    out.centrality_ok = true;
    for (auto [x, y] : pairs) {
        QMatrix c = mat_commutator(T.images[size_t(x)], T.images[size_t(y)]);
        for (int v = 0; v < 6; ++v)
            if (!mat_commutator(c, T.images[size_t(v)]).is_zero()) {
                out.centrality_ok = false;
                out.non_central_pairs.emplace_back(x, y);
                break;
            }
    }
    if (!out.centrality_ok) {
        out.failure = "opposite-pair commutator is not central";
        return out;
    }

    out.irreducible = burnside_irreducible(T.images);
    if (!out.irreducible) {
        out.failure = "vertex operators do not act irreducibly; no lambda extraction";
        return out;
    }

    // lambda_Z from face closure: T(Z) - [T(X), T(Y)] must be scalar, the
    // same scalar for both faces through Z.
    std::vector<std::optional<Rat>> lambda(6);
    for (int f = 0; f < 4; ++f)
        for (int r = 0; r < 3; ++r) {
            int x = kFaces[f][r], y = kFaces[f][(r + 1) % 3], z = kFaces[f][(r + 2) % 3];
            QMatrix diff =
                T.images[size_t(z)] - mat_commutator(T.images[size_t(x)], T.images[size_t(y)]);
            auto s = diff.as_scalar_identity();
            if (!s) {
                out.failure = "face residual is not scalar at vertex " + oct.labels()[size_t(z)];
                return out;
            }
            if (lambda[size_t(z)] && *lambda[size_t(z)] != *s) {
                out.failure = "inconsistent scalar shifts at vertex " + oct.labels()[size_t(z)];
                return out;
            }
            lambda[size_t(z)] = *s;
        }
    out.lambdas.resize(6);
    for (int v = 0; v < 6; ++v) out.lambdas[size_t(v)] = *lambda[size_t(v)];
    out.lambdas_found = true;

    // Shifted operators must satisfy the full so(4) table: faces close
    // cyclically, opposite-pair commutators vanish.
    std::vector<QMatrix> S(6);
    for (int v = 0; v < 6; ++v)
        S[size_t(v)] =
            T.images[size_t(v)] - QMatrix::identity(T.target_dim).scale(out.lambdas[size_t(v)]);
    out.so4_relations_ok = true;
    for (int f = 0; f < 4; ++f)
        for (int r = 0; r < 3; ++r) {
            int x = kFaces[f][r], y = kFaces[f][(r + 1) % 3], z = kFaces[f][(r + 2) % 3];
            if (mat_commutator(S[size_t(x)], S[size_t(y)]) != S[size_t(z)])
                out.so4_relations_ok = false;
        }
    for (auto [x, y] : pairs)
        if (!mat_commutator(S[size_t(x)], S[size_t(y)]).is_zero()) out.so4_relations_ok = false;
    if (!out.so4_relations_ok) out.failure = "shifted operators fail the so(4) relations";
    return out;
}

MatrixRep tensor_rep(const MatrixRep& t1, const MatrixRep& t2) {
    if (t1.images.size() != t2.images.size())
        throw std::domain_error("tensor_rep: ambient dimension mismatch");
    MatrixRep out;
    out.target_dim = t1.target_dim * t2.target_dim;
    QMatrix i1 = QMatrix::identity(t1.target_dim);
    QMatrix i2 = QMatrix::identity(t2.target_dim);
    for (size_t v = 0; v < t1.images.size(); ++v)
        out.images.push_back(t1.images[v].kron(i2) + i1.kron(t2.images[v]));
    return out;
}

}  // namespace qrsym
