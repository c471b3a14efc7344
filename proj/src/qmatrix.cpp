#include "qrsym/qmatrix.hpp"

#include <stdexcept>
#include <sstream>

namespace qrsym {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[size_t(i)].size()) != c)
            throw std::domain_error("QMatrix::from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[size_t(i)][size_t(j)];
    }
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::domain_error("QMatrix: shape mismatch in +");
    QMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const { return *this + (-o); }

QMatrix QMatrix::operator-() const {
    QMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::domain_error("QMatrix: shape mismatch in *");
    QMatrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& y = o.at(k, j);
                if (!y.is_zero()) m.at(i, j) += x * y;
            }
        }
    return m;
}

QMatrix QMatrix::scale(const Rat& s) const {
    QMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

QMatrix QMatrix::kron(const QMatrix& o) const {
    QMatrix m(rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Rat& x = at(i, j);
            if (x.is_zero()) continue;
            for (int p = 0; p < o.rows_; ++p)
                for (int q = 0; q < o.cols_; ++q) {
                    const Rat& y = o.at(p, q);
                    if (!y.is_zero()) m.at(i * o.rows_ + p, j * o.cols_ + q) = x * y;
                }
        }
    return m;
}

bool QMatrix::is_zero() const {
    for (const Rat& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<Rat> QMatrix::as_scalar_identity() const {
    if (rows_ != cols_ || rows_ == 0) return std::nullopt;
    Rat lambda = at(0, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j && at(i, j) != lambda) return std::nullopt;
            if (i != j && !at(i, j).is_zero()) return std::nullopt;
        }
    return lambda;
}

std::vector<Rat> QMatrix::col(int j) const {
    std::vector<Rat> v(static_cast<size_t>(rows_), Rat(0));
    for (int i = 0; i < rows_; ++i) v[size_t(i)] = at(i, j);
    return v;
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<int> echelon(QMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rat f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int QMatrix::rank() const {
    QMatrix m = *this;
    return int(echelon(m).size());
}

QMatrix QMatrix::nullspace() const {
    QMatrix m = *this;
    std::vector<int> pivots = echelon(m);
    std::vector<bool> is_pivot(size_t(cols_), false);
    for (int c : pivots) is_pivot[size_t(c)] = true;
    int nfree = cols_ - int(pivots.size());
    QMatrix basis(cols_, nfree);
    int k = 0;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[size_t(c)]) continue;
        basis.at(c, k) = Rat(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            basis.at(pivots[r], k) = -m.at(int(r), c);
        ++k;
    }
    return basis;
}

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) throw std::domain_error("QMatrix::inverse: not square");
    QMatrix aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Rat(1);
    }
    std::vector<int> pivots = echelon(aug);
    if (int(pivots.size()) != rows_)
        throw std::domain_error("QMatrix::inverse: singular matrix");
    QMatrix inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
        os << "]";
    }
    return os.str();
}

int joint_rank(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) throw std::domain_error("joint_rank: row mismatch");
    QMatrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m.rank();
}

QMatrix column_space_intersection(const QMatrix& a, const QMatrix& b) {
    // Null vectors of [a | -b] give pairs (x, y) with a x = b y.
    QMatrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = -b.at(i, j);
    }
    QMatrix ns = m.nullspace();
    QMatrix xs(a.cols(), ns.cols());
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < ns.cols(); ++j) xs.at(i, j) = ns.at(i, j);
    QMatrix vecs = a * xs;
    // Reduce to an independent set.
    QMatrix vt = vecs.transpose();
    std::vector<int> pivots = echelon(vt);
    QMatrix out(a.rows(), int(pivots.size()));
    for (int r = 0; r < int(pivots.size()); ++r)
        for (int i = 0; i < a.rows(); ++i) out.at(i, r) = vt.at(r, i);
    return out;
}

bool in_column_span(const QMatrix& basis, const std::vector<Rat>& v) {
    if (int(v.size()) != basis.rows())
        throw std::domain_error("in_column_span: dimension mismatch");
    QMatrix vm(basis.rows(), 1);
    for (int i = 0; i < basis.rows(); ++i) vm.at(i, 0) = v[size_t(i)];
    return joint_rank(basis, vm) == basis.rank();
}

}  // namespace qrsym
