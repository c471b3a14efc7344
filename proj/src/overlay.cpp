#include "qrsym/overlay.hpp"
#include "qrsym/witt_window.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace qrsym {

Decomposition::Decomposition(int ambient_dim, std::vector<QMatrix> subspaces)
    : ambient_(ambient_dim), subspaces_(std::move(subspaces)) {
    if (subspaces_.empty()) throw std::domain_error("Decomposition: no subspaces");
    int total = 0;
    QMatrix all(ambient_, 0);
    for (const auto& s : subspaces_) {
        if (s.rows() != ambient_)
            throw std::domain_error("Decomposition: subspace has wrong ambient dim");
        if (s.cols() == 0 || s.rank() != s.cols())
            throw std::domain_error("Decomposition: subspace basis not independent");
        total += s.cols();
    }
    QMatrix cat(ambient_, total);
    int c0 = 0;
    for (const auto& s : subspaces_) {
        for (int i = 0; i < ambient_; ++i)
            for (int j = 0; j < s.cols(); ++j) cat.at(i, c0 + j) = s.at(i, j);
        c0 += s.cols();
    }
    if (cat.rank() != ambient_)
        throw std::domain_error("Decomposition: subspaces do not span the ambient space");
    direct_ = (total == ambient_);
}

Decomposition Decomposition::trivial(int ambient_dim) {
    return Decomposition(ambient_dim, {QMatrix::identity(ambient_dim)});
}

Decomposition Decomposition::bands(int ambient_dim,
                                   const std::vector<std::pair<int, int>>& ranges) {
    std::vector<QMatrix> subs;
    for (auto [lo, hi] : ranges) {
        QMatrix b(ambient_dim, hi - lo + 1);
        for (int j = lo; j <= hi; ++j) b.at(j, j - lo) = Rat(1);
        subs.push_back(std::move(b));
    }
    return Decomposition(ambient_dim, std::move(subs));
}

OperatorComposite::OperatorComposite(Decomposition d) : d_(std::move(d)) {
    if (!d_.direct())
        throw std::domain_error(
            "build_LC: decomposition is not direct; the block realization of "
            "End(H_i) inside End(H) is only defined for direct sums");
    adapted_ = QMatrix(d_.ambient(), d_.ambient());
    int c0 = 0;
    for (int i = 0; i < d_.count(); ++i) {
        const QMatrix& s = d_.subspace(i);
        block_.emplace_back(c0, c0 + s.cols());
        for (int r = 0; r < d_.ambient(); ++r)
            for (int j = 0; j < s.cols(); ++j) adapted_.at(r, c0 + j) = s.at(r, j);
        c0 += s.cols();
    }
    adapted_inv_ = adapted_.inverse();
}

int OperatorComposite::piece_dim(int i) const {
    auto [lo, hi] = block_[size_t(i)];
    return (hi - lo) * (hi - lo);
}

bool OperatorComposite::piece_contains(int i, const QMatrix& x) const {
    QMatrix y = adapted_inv_ * x * adapted_;
    auto [lo, hi] = block_[size_t(i)];
    for (int r = 0; r < y.rows(); ++r)
        for (int c = 0; c < y.cols(); ++c) {
            bool inside = r >= lo && r < hi && c >= lo && c < hi;
            if (!inside && !y.at(r, c).is_zero()) return false;
        }
    return true;
}

std::string OverlayReport::first_violation() const {
    if (violations.empty()) return "";
    const auto& v = violations.front();
    std::ostringstream os;
    os << v.kind << " piece=" << v.piece << " a=" << v.a;
    if (v.b >= 0) os << " b=" << v.b;
    return os.str();
}

OverlayReport is_overlay_rep(const LieComposite& c, const MatrixRep& T,
                             const OperatorComposite& lc, const std::vector<int>& assignment) {
    if (int(T.images.size()) != c.dim())
        throw std::domain_error("is_overlay_rep: image count != ambient dim");
    if (int(assignment.size()) != int(c.pieces().size()))
        throw std::domain_error("is_overlay_rep: assignment size != piece count");
    for (int a : assignment)
        if (a < 0 || a >= lc.pieces())
            throw std::domain_error("is_overlay_rep: assignment out of range");

    OverlayReport rep;
    for (size_t pi = 0; pi < c.pieces().size(); ++pi) {
        const auto& p = c.pieces()[pi];
        int target = assignment[pi];
        std::vector<QMatrix> tx(size_t(p.dim()));
        for (int a = 0; a < p.dim(); ++a) {
            tx[size_t(a)] = T.apply(p.basis.col(a));
            if (!lc.piece_contains(target, tx[size_t(a)]))
                rep.violations.push_back({"containment", int(pi), a, -1});
        }
        for (int a = 0; a < p.dim(); ++a)
            for (int b = a + 1; b < p.dim(); ++b)
                if (mat_commutator(tx[size_t(a)], tx[size_t(b)]) != T.apply(p.bracket_ambient(a, b)))
                    rep.violations.push_back({"bracket", int(pi), a, b});
    }
    // Glueing: images of intersection elements must land in the
    // intersection of the assigned operator pieces.
    for (size_t pi = 0; pi < c.pieces().size(); ++pi)
        for (size_t pj = pi + 1; pj < c.pieces().size(); ++pj) {
            QMatrix inter =
                column_space_intersection(c.pieces()[pi].basis, c.pieces()[pj].basis);
            for (int r = 0; r < inter.cols(); ++r) {
                QMatrix tv = T.apply(inter.col(r));
                if (!lc.piece_contains(assignment[pi], tv) ||
                    !lc.piece_contains(assignment[pj], tv))
                    rep.violations.push_back({"glueing", int(pi), r, int(pj)});
            }
        }
    return rep;
}

// -------------------------------------------------- Theorem 1C window search

namespace {

struct WindowFamily {
    int spin = 2;
    std::vector<WittLabel> labels;
    std::map<std::string, QMatrix> mats;
    std::map<std::string, int> shift;

    // spin 2: pieces i >= -1 and i <= 1 of the e-family; spin 1: the abelian
    // current pieces i >= 0 and i <= 0.
    bool in_piece(const WittLabel& l, int piece) const {
        if (spin == 2) return piece > 0 ? l.index >= -1 : l.index <= 1;
        return piece > 0 ? l.index >= 0 : l.index <= 0;
    }
    std::vector<WittLabel> intersection() const {
        if (spin == 2) return {{'e', -1}, {'e', 0}, {'e', 1}};
        return {{'f', 0}};
    }
    // In-piece window-closed bracket: scalar times a family label.
    std::optional<std::pair<Rat, WittLabel>> bracket(const WittLabel& x,
                                                     const WittLabel& y) const {
        bool common = (in_piece(x, +1) && in_piece(y, +1)) ||
                      (in_piece(x, -1) && in_piece(y, -1));
        if (!common || std::abs(x.index + y.index) > 2) return std::nullopt;
        if (spin == 1) return std::make_pair(Rat(0), WittLabel{'f', 0});
        return std::make_pair(Rat(x.index - y.index),
                              WittLabel{'e', x.index + y.index});
    }
};

bool column_in_band(int n, const std::pair<int, int>& band) {
    return n >= band.first && n <= band.second;
}

// Interior-restricted containment of a single-shift window operator in the
// block End(H_band): interior columns inside the band must keep their
// support inside the band, interior columns outside it must vanish.
bool band_contains(const QMatrix& m, int shift, int N, const std::pair<int, int>& band,
                   std::string& why) {
    for (int n = 0; n <= N; ++n) {
        if (n + shift < 0 || n + shift > N) continue;  // boundary column
        for (int r = 0; r <= N; ++r) {
            if (m.at(r, n).is_zero()) continue;
            if (!column_in_band(n, band) || !column_in_band(r, band)) {
                std::ostringstream os;
                os << "containment col=" << n << " row=" << r;
                why = os.str();
                return false;
            }
        }
    }
    return true;
}

bool candidate_passes(const WindowFamily& fam, int N,
                      const std::vector<std::pair<int, int>>& bands,
                      const std::vector<int>& assign, std::string& why) {
    // Containment per piece.
    for (int piece : {0, 1}) {
        int sgn = piece == 0 ? +1 : -1;
        for (const auto& l : fam.labels) {
            if (!fam.in_piece(l, sgn)) continue;
            std::string sub;
            if (!band_contains(fam.mats.at(l.str()), fam.shift.at(l.str()), N,
                               bands[size_t(assign[size_t(piece)])], sub)) {
                why = l.str() + " " + sub;
                return false;
            }
        }
    }
    // Glueing on the piece intersection.
    for (const auto& l : fam.intersection()) {
        for (int piece : {0, 1}) {
            std::string sub;
            if (!band_contains(fam.mats.at(l.str()), fam.shift.at(l.str()), N,
                               bands[size_t(assign[size_t(piece)])], sub)) {
                why = "glueing " + l.str() + " " + sub;
                return false;
            }
        }
    }
    // Bracket relations on interior columns.
    for (const auto& x : fam.labels)
        for (const auto& y : fam.labels) {
            auto br = fam.bracket(x, y);
            if (!br) continue;
            const QMatrix& mx = fam.mats.at(x.str());
            const QMatrix& my = fam.mats.at(y.str());
            QMatrix lhs = mat_commutator(mx, my);
            QMatrix rhs = br->first.is_zero() ? QMatrix(N + 1, N + 1)
                                              : fam.mats.at(br->second.str()).scale(br->first);
            int sx = fam.shift.at(x.str()), sy = fam.shift.at(y.str());
            for (int n = 0; n <= N; ++n) {
                bool interior = n + sx >= 0 && n + sx <= N && n + sy >= 0 && n + sy <= N &&
                                n + sx + sy >= 0 && n + sx + sy <= N;
                if (!interior) continue;
                for (int r = 0; r <= N; ++r)
                    if (lhs.at(r, n) != rhs.at(r, n)) {
                        std::ostringstream os;
                        os << "bracket (" << x.str() << "," << y.str() << ") col=" << n;
                        why = os.str();
                        return false;
                    }
            }
        }
    return true;
}

}  // namespace

WindowSearchReport theorem_1C_window(const WeightParam& w, int N, int spin) {
    if (N < 4) throw std::domain_error("theorem_1C_window: N must be >= 4");
    if (spin != 1 && spin != 2) throw std::domain_error("theorem_1C_window: spin must be 1 or 2");

    WindowSearchReport rep;
    rep.h = w.h();
    rep.N = N;
    rep.spin = spin;

    WittIndexMap rho(w);
    WindowFamily fam;
    fam.spin = spin;
    for (int i = -2; i <= 2; ++i) {
        WittLabel l{spin == 2 ? 'e' : 'f', i};
        GradedOp op = spin == 2 ? rho.op(i) : rho.f_op(i);
        fam.labels.push_back(l);
        fam.mats.emplace(l.str(), op.truncate_to_matrix(N));
        fam.shift.emplace(l.str(), op.is_zero() ? 0 : op.min_shift());
    }

    // Contiguous band partitions of {0..N}, enumerated by gap bitmask.
    for (int mask = 0; mask < (1 << N); ++mask) {
        std::vector<std::pair<int, int>> bands;
        int lo = 0;
        for (int p = 0; p < N; ++p)
            if (mask & (1 << p)) {
                bands.emplace_back(lo, p);
                lo = p + 1;
            }
        bands.emplace_back(lo, N);

        WindowCandidateResult res;
        res.bands = bands;
        std::string first_why;
        int nb = int(bands.size());
        for (int a0 = 0; a0 < nb && !res.pass; ++a0)
            for (int a1 = 0; a1 < nb && !res.pass; ++a1) {
                std::string why;
                if (candidate_passes(fam, N, bands, {a0, a1}, why)) {
                    res.pass = true;
                } else if (first_why.empty()) {
                    first_why = why;
                }
            }
        if (!res.pass) res.first_violation = first_why;
        rep.candidates.push_back(std::move(res));
    }
    return rep;
}

std::string WindowSearchReport::to_json() const {
    nlohmann::json out;
    out["h"] = h.str();
    out["N"] = N;
    out["spin"] = spin;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : candidates) {
        nlohmann::json jc;
        nlohmann::json bs = nlohmann::json::array();
        for (auto [lo, hi] : c.bands) bs.push_back({{"lo", lo}, {"hi", hi}});
        jc["bands"] = bs;
        jc["pass"] = c.pass;
        jc["first_violation"] = c.first_violation;
        arr.push_back(jc);
    }
    out["candidates"] = arr;
    return out.dump(2);
}

}  // namespace qrsym
