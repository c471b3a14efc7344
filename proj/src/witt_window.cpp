#include "qrsym/witt_window.hpp"

#include <stdexcept>

namespace qrsym {

TruncatedWittComposite::TruncatedWittComposite(int K, bool extended)
    : K_(K), extended_(extended) {
    if (K < 2) throw std::domain_error("TruncatedWittComposite: K must be >= 2");
    for (int i = -K; i <= K; ++i) basis_.push_back({'e', i});
    if (extended)
        for (int i = -K; i <= K; ++i) basis_.push_back({'f', i});
}

bool TruncatedWittComposite::in_piece(const WittLabel& x, int piece) const {
    if (x.family == 'e') return piece > 0 ? in_piece_plus(x.index) : in_piece_minus(x.index);
    if (!extended_) return false;
    return piece > 0 ? f_in_piece_plus(x.index) : f_in_piece_minus(x.index);
}

std::optional<TruncatedWittComposite::BracketTerm>
TruncatedWittComposite::bracket(const WittLabel& x, const WittLabel& y) const {
    bool common_piece = (in_piece(x, +1) && in_piece(y, +1)) ||
                        (in_piece(x, -1) && in_piece(y, -1));
    if (!common_piece || !window_closed(x.index, y.index)) return std::nullopt;
    int s = x.index + y.index;
    if (x.family == 'e' && y.family == 'e')
        return BracketTerm{Rat(x.index - y.index), {'e', s}};
    if (x.family == 'f' && y.family == 'f') return BracketTerm{Rat(0), {'f', s}};
    // Mixed rule [e_i, f_j] = -j f_{i+j}; solved against the operator family,
    // not copied (the printed relation is not Jacobi-consistent).  The target
    // must stay inside the common piece unless the coefficient vanishes.
    int i = x.family == 'e' ? x.index : y.index;
    int j = x.family == 'e' ? y.index : x.index;
    Rat coeff = Rat(-j);
    if (x.family == 'f') coeff = -coeff;
    if (!coeff.is_zero()) {
        bool target_ok = (in_piece(x, +1) && in_piece(y, +1) && f_in_piece_plus(s)) ||
                         (in_piece(x, -1) && in_piece(y, -1) && f_in_piece_minus(s));
        if (!target_ok) return std::nullopt;
    }
    (void)i;
    return BracketTerm{coeff, {'f', s}};
}

std::vector<WittLabel> TruncatedWittComposite::piece_intersection() const {
    std::vector<WittLabel> out = {{'e', -1}, {'e', 0}, {'e', 1}};
    if (extended_) out.push_back({'f', 0});
    return out;
}

std::map<std::string, QMatrix> window_matrices(const TruncatedWittComposite& c,
                                               const WittIndexMap& rho, int N) {
    std::map<std::string, QMatrix> out;
    for (const auto& l : c.basis()) {
        GradedOp op = l.family == 'e' ? rho.op(l.index) : rho.f_op(l.index);
        out.emplace(l.str(), op.truncate_to_matrix(N));
    }
    return out;
}

namespace {

int op_shift(const WittIndexMap& rho, const WittLabel& l) {
    GradedOp op = l.family == 'e' ? rho.op(l.index) : rho.f_op(l.index);
    if (op.is_zero()) return 0;
    return op.min_shift();  // family members are single-shift
}

}  // namespace

WindowCheckReport window_rep_check(const TruncatedWittComposite& c, const WittIndexMap& rho,
                                   int N) {
    if (N < 4) throw std::domain_error("window_rep_check: N must be >= 4");
    WindowCheckReport rep;
    rep.N = N;
    auto mats = window_matrices(c, rho, N);
    for (const auto& x : c.basis())
        for (const auto& y : c.basis()) {
            auto br = c.bracket(x, y);
            if (!br) continue;
            ++rep.checked_pairs;
            const QMatrix& mx = mats.at(x.str());
            const QMatrix& my = mats.at(y.str());
            QMatrix lhs = mat_commutator(mx, my);
            QMatrix rhs = br->coeff.is_zero()
                              ? QMatrix(N + 1, N + 1)
                              : mats.at(br->label.str()).scale(br->coeff);
            int sx = op_shift(rho, x), sy = op_shift(rho, y);
            for (int n = 0; n <= N; ++n) {
                bool interior = n + sx >= 0 && n + sx <= N && n + sy >= 0 && n + sy <= N &&
                                n + sx + sy >= 0 && n + sx + sy <= N;
                if (!interior) continue;
                bool ok = true;
                for (int r = 0; r <= N && ok; ++r) ok = lhs.at(r, n) == rhs.at(r, n);
                if (!ok) {
                    rep.violations.push_back({x, y, n});
                    break;
                }
            }
        }
    return rep;
}

WindowCheckReport tensor_window_rep_check(const TruncatedWittComposite& c,
                                          const WittIndexMap& rho1, int N1,
                                          const WittIndexMap& rho2, int N2) {
    if (N1 < 4 || N2 < 4)
        throw std::domain_error("tensor_window_rep_check: N must be >= 4");
    WindowCheckReport rep;
    rep.N = (N1 + 1) * (N2 + 1) - 1;
    auto m1 = window_matrices(c, rho1, N1);
    auto m2 = window_matrices(c, rho2, N2);
    QMatrix i1 = QMatrix::identity(N1 + 1), i2 = QMatrix::identity(N2 + 1);
    std::map<std::string, QMatrix> mt;
    for (const auto& l : c.basis())
        mt.emplace(l.str(), m1.at(l.str()).kron(i2) + i1.kron(m2.at(l.str())));
    int dim = (N1 + 1) * (N2 + 1);
    for (const auto& x : c.basis())
        for (const auto& y : c.basis()) {
            auto br = c.bracket(x, y);
            if (!br) continue;
            ++rep.checked_pairs;
            QMatrix lhs = mat_commutator(mt.at(x.str()), mt.at(y.str()));
            QMatrix rhs = br->coeff.is_zero() ? QMatrix(dim, dim)
                                              : mt.at(br->label.str()).scale(br->coeff);
            int sx1 = op_shift(rho1, x), sy1 = op_shift(rho1, y);
            int sx2 = op_shift(rho2, x), sy2 = op_shift(rho2, y);
            bool found = false;
            for (int n1 = 0; n1 <= N1 && !found; ++n1)
                for (int n2 = 0; n2 <= N2 && !found; ++n2) {
                    auto inside = [](int v, int hi) { return v >= 0 && v <= hi; };
                    bool interior = inside(n1 + sx1, N1) && inside(n1 + sy1, N1) &&
                                    inside(n1 + sx1 + sy1, N1) && inside(n2 + sx2, N2) &&
                                    inside(n2 + sy2, N2) && inside(n2 + sx2 + sy2, N2);
                    if (!interior) continue;
                    int col = n1 * (N2 + 1) + n2;
                    for (int r = 0; r < dim; ++r)
                        if (lhs.at(r, col) != rhs.at(r, col)) {
                            rep.violations.push_back({x, y, col});
                            found = true;
                            break;
                        }
                }
        }
    return rep;
}

}  // namespace qrsym
