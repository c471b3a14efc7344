#include "doctest.h"

#include "qrsym/burnside.hpp"
#include "qrsym/composite.hpp"
#include "qrsym/witt_family.hpp"

#include <deque>

using namespace qrsym;

namespace {

// Test-side oracle: search for a proper invariant subspace as the Krylov
// closure of candidate vectors (standard basis vectors plus kernels of the
// generators).  Instances below are chosen with rational spectra, where
// this search and the Burnside criterion must agree.
bool invariant_subspace_found(const std::vector<QMatrix>& ops) {
    int n = ops[0].rows();
    std::vector<std::vector<Rat>> candidates;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> e(size_t(n), Rat(0));
        e[size_t(i)] = Rat(1);
        candidates.push_back(e);
    }
    for (const auto& op : ops) {
        QMatrix ker = op.nullspace();
        for (int c = 0; c < ker.cols(); ++c) candidates.push_back(ker.col(c));
    }
    for (const auto& v0 : candidates) {
        bool zero = true;
        for (const auto& x : v0) zero = zero && x.is_zero();
        if (zero) continue;
        QMatrix span(n, 1);
        for (int i = 0; i < n; ++i) span.at(i, 0) = v0[size_t(i)];
        std::deque<std::vector<Rat>> work = {v0};
        while (!work.empty()) {
            auto v = work.front();
            work.pop_front();
            QMatrix vm(n, 1);
            for (int i = 0; i < n; ++i) vm.at(i, 0) = v[size_t(i)];
            for (const auto& op : ops) {
                QMatrix w = op * vm;
                if (in_column_span(span, w.col(0))) continue;
                QMatrix bigger(n, span.cols() + 1);
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < span.cols(); ++j) bigger.at(i, j) = span.at(i, j);
                    bigger.at(i, span.cols()) = w.at(i, 0);
                }
                span = bigger;
                work.push_back(w.col(0));
            }
        }
        if (span.rank() < n) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("identity alone is reducible, and its algebra is 1-dimensional") {
    std::vector<QMatrix> ops = {QMatrix::identity(3)};
    CHECK(algebra_dimension(ops) == 1);
    CHECK(!burnside_irreducible(ops));
}

TEST_CASE("truncated z and d/dz generate the full matrix algebra") {
    QMatrix z(4, 4), d(4, 4);
    for (int n = 0; n < 3; ++n) {
        z.at(n + 1, n) = Rat(1);
        d.at(n, n + 1) = Rat(n + 1);
    }
    std::vector<QMatrix> ops = {z, d};
    CHECK(algebra_dimension(ops) == 16);
    CHECK(burnside_irreducible(ops));
}

TEST_CASE("block-diagonal projectors are reducible") {
    QMatrix p(4, 4), q(4, 4);
    p.at(0, 0) = p.at(1, 1) = Rat(1);
    q.at(2, 2) = q.at(3, 3) = Rat(1);
    CHECK(!burnside_irreducible({p, q}));
}

TEST_CASE("burnside agrees with the invariant-subspace search at small size") {
    std::vector<std::vector<QMatrix>> instances;
    instances.push_back({QMatrix::identity(2)});
    instances.push_back({QMatrix::identity(4)});
    {
        QMatrix p(4, 4), q(4, 4);
        p.at(0, 0) = p.at(1, 1) = Rat(1);
        q.at(2, 2) = q.at(3, 3) = Rat(1);
        instances.push_back({p, q});
    }
    {
        QMatrix z(4, 4), d(4, 4);
        for (int n = 0; n < 3; ++n) {
            z.at(n + 1, n) = Rat(1);
            d.at(n, n + 1) = Rat(n + 1);
        }
        instances.push_back({z, d});
    }
    {
        QMatrix z(3, 3), d(3, 3);
        for (int n = 0; n < 2; ++n) {
            z.at(n + 1, n) = Rat(1);
            d.at(n, n + 1) = Rat(n + 1);
        }
        instances.push_back({z, d});
    }
    instances.push_back(octahedron_so4_model().images);
    {
        // upper-triangular pair: common invariant subspace span(e_0)
        QMatrix a(3, 3), b(3, 3);
        a.at(0, 0) = Rat(1);
        a.at(0, 1) = Rat(2);
        a.at(1, 1) = Rat(3);
        a.at(2, 2) = Rat(1, 2);
        b.at(0, 2) = Rat(1);
        b.at(1, 1) = Rat(1);
        b.at(2, 2) = Rat(5);
        instances.push_back({a, b});
    }
    for (const auto& ops : instances)
        CHECK(burnside_irreducible(ops) == !invariant_subspace_found(ops));
}

TEST_CASE("so(4) model acts irreducibly") {
    CHECK(burnside_irreducible(octahedron_so4_model().images));
}

TEST_CASE("window truncation of the composed family acts irreducibly") {
    WeightParam w(Rat(1));
    WittIndexMap rho(w);
    std::vector<QMatrix> ops;
    for (int i = -2; i <= 2; ++i) ops.push_back(rho.op(i).truncate_to_matrix(6));
    CHECK(burnside_irreducible(ops));
}

TEST_CASE("tensor square of one window is never Burnside-irreducible") {
    // The Leibniz operators of a rep tensored with itself commute with the
    // coordinate swap, so the generated algebra cannot be full.
    WeightParam w(Rat(1));
    WittIndexMap rho(w);
    std::vector<QMatrix> ops;
    for (int i = -2; i <= 2; ++i) ops.push_back(rho.op(i).truncate_to_matrix(4));
    CHECK(!burnside_irreducible_tensor(ops, ops));
}

TEST_CASE("tensor of two distinct-weight windows is Burnside-irreducible") {
    WeightParam w1(Rat(1)), w2(Rat(3, 2));
    WittIndexMap r1(w1), r2(w2);
    std::vector<QMatrix> a, b;
    for (int i = -2; i <= 2; ++i) {
        a.push_back(r1.op(i).truncate_to_matrix(4));
        b.push_back(r2.op(i).truncate_to_matrix(4));
    }
    CHECK(burnside_irreducible_tensor(a, b));
}

TEST_CASE("mod-p reduction round trips simple rationals") {
    QMatrix m(2, 2);
    m.at(0, 0) = Rat(3, 7);
    m.at(1, 0) = Rat(-2);
    SparseModMat s;
    REQUIRE(reduce_mod_p(m, 2147483647ULL, s));
    // 3/7 mod p times 7 must be 3
    CHECK(s.rows[0][0].second * 7 % 2147483647ULL == 3);
    CHECK((s.rows[1][0].second + 2) % 2147483647ULL == 0);
}
