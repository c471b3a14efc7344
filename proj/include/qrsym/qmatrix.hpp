#ifndef QRSYM_QMATRIX_HPP
#define QRSYM_QMATRIX_HPP

#include "qrsym/rat.hpp"

#include <vector>
#include <string>
#include <optional>

namespace qrsym {

/// Dense exact matrix over Rat.  Everything downstream (composites,
/// representations, Burnside closures at desk scale) runs on these.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {}
    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[size_t(i) * size_t(cols_) + size_t(j)]; }
    const Rat& at(int i, int j) const { return a_[size_t(i) * size_t(cols_) + size_t(j)]; }

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator-() const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix scale(const Rat& s) const;
    QMatrix transpose() const;
    /// Kronecker product.
    QMatrix kron(const QMatrix& o) const;

    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const QMatrix& o) const { return !(*this == o); }
    bool is_zero() const;
    /// If the matrix is lambda * I, returns lambda.
    std::optional<Rat> as_scalar_identity() const;

    std::vector<Rat> col(int j) const;
    std::vector<Rat> flatten() const { return a_; }

    int rank() const;
    /// Basis of the null space, as columns.
    QMatrix nullspace() const;
    /// Square inverse; throws on singular input.
    QMatrix inverse() const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

inline QMatrix mat_commutator(const QMatrix& a, const QMatrix& b) {
    return a * b - b * a;
}

/// rank of the column span of the concatenation [a | b].
int joint_rank(const QMatrix& a, const QMatrix& b);

/// Basis (columns) of colspace(a) intersected with colspace(b).
QMatrix column_space_intersection(const QMatrix& a, const QMatrix& b);

/// True iff v lies in the column span of basis.
bool in_column_span(const QMatrix& basis, const std::vector<Rat>& v);

}  // namespace qrsym

#endif
