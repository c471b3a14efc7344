#include "doctest.h"

#include "qrsym/graded_op.hpp"
#include "support/gen.hpp"

using namespace qrsym;

namespace {

// Independent oracle for the bracket: act on monomials directly and compare
// coefficient lists, bypassing the symbolic composition path.
VermaVec bracket_by_action(const GradedOp& a, const GradedOp& b, int n) {
    VermaVec zn = VermaVec::monomial(n);
    return a.apply(b.apply(zn)) - b.apply(a.apply(zn));
}

}  // namespace

TEST_CASE("basic operators act as calculus says") {
    CHECK(GradedOp::diff(1).apply(VermaVec::monomial(3)) == VermaVec::monomial(2, Rat(3)));
    CHECK(GradedOp::diff(2).apply(VermaVec::monomial(1)).is_zero());
    // (xi + h) at h = 1/2 on z^3
    GradedOp l0 = GradedOp::fun_xi(RatFun(Poly::linear(Rat(1, 2))));
    CHECK(l0.apply(VermaVec::monomial(3)) == VermaVec::monomial(3, Rat(7, 2)));
    CHECK_THROWS_AS(GradedOp::diff(-1), std::domain_error);
    CHECK_THROWS_AS(GradedOp::mul_z(-2), std::domain_error);
    // a pole at a nonnegative integer is rejected at construction
    CHECK_THROWS_AS(GradedOp::fun_xi(RatFun(Poly::constant(Rat(1)), Poly::linear(Rat(-3)))),
                    WellFormedError);
}

TEST_CASE("compose matches the classical identities") {
    GradedOp d = GradedOp::diff(1), z = GradedOp::mul_z(1);
    CHECK(commutator(d, z) == GradedOp::identity());          // [d/dz, z] = 1
    CHECK(z.compose(d) == GradedOp::fun_xi(RatFun::nu()));    // z d/dz = xi
    CHECK(d.compose(z) == GradedOp::fun_xi(RatFun(Poly::linear(Rat(1)))));  // xi + 1
    CHECK(d.compose(d) == GradedOp::diff(2));
    CHECK(commutator(GradedOp::fun_xi(RatFun::nu()), z) == z);  // [xi, z] = z
}

TEST_CASE("op_equal distinguishes and identifies") {
    GradedOp a = GradedOp::diff(1);
    CHECK(op_equal(a, a));
    CHECK(!op_equal(a, GradedOp::diff(2)));
    CHECK(op_equal(GradedOp::diff(1).compose(GradedOp::mul_z(1)),
                   GradedOp::fun_xi(RatFun(Poly::linear(Rat(1))))));
}

TEST_CASE("apply is linear and matches monomial semantics") {
    GradedOp d = GradedOp::diff(1);
    VermaVec v = VermaVec::parse("1 + z^2");
    CHECK(d.apply(v) == VermaVec::parse("2*z"));
    CHECK(GradedOp::mul_z(2).apply(VermaVec::parse("z")) == VermaVec::parse("z^3"));
    GradedOp half = GradedOp::fun_xi(RatFun(Poly::linear(Rat(1, 2))));
    CHECK(half.apply(VermaVec::monomial(3)) == VermaVec::monomial(3, Rat(7, 2)));
}

TEST_CASE("verma text round trip") {
    CHECK(VermaVec::parse("7/2*z^3").str() == "7/2*z^3");
    CHECK(VermaVec::parse("-z + 1").str() == "1 - z");
    CHECK(VermaVec::parse("0").str() == "0");
    CHECK(VermaVec::parse("z^2 - z^2").is_zero());
}

TEST_CASE("truncate_to_matrix windows") {
    QMatrix id = GradedOp::identity().truncate_to_matrix(2);
    CHECK(id == QMatrix::identity(3));

    QMatrix d = GradedOp::diff(1).truncate_to_matrix(2);
    CHECK(d.at(0, 1) == Rat(1));
    CHECK(d.at(1, 2) == Rat(2));
    CHECK(d.at(0, 0).is_zero());

    // z on {1, z}: z^1 -> z^2 is projected out.
    QMatrix z = GradedOp::mul_z(1).truncate_to_matrix(1);
    CHECK(z.at(1, 0) == Rat(1));
    CHECK(z.at(0, 1).is_zero());
    CHECK(z.at(1, 1).is_zero());
}

TEST_CASE("range safety enforced across combinators") {
    std::mt19937 rng(23);
    for (int it = 0; it < 60; ++it) {
        GradedOp a = testgen::random_graded_op(rng);
        GradedOp b = testgen::random_graded_op(rng);
        for (const GradedOp& op : {a + b, a - b, a.compose(b), commutator(a, b)})
            for (const auto& [dshift, c] : op.components()) {
                CHECK(!c.is_zero());
                for (long n = 0; n < -dshift; ++n) CHECK(c.eval(Rat(n)).is_zero());
            }
    }
}

TEST_CASE("composition is associative; bracket is a Lie bracket") {
    std::mt19937 rng(29);
    for (int it = 0; it < 25; ++it) {
        GradedOp a = testgen::random_graded_op(rng, 2, 2);
        GradedOp b = testgen::random_graded_op(rng, 2, 2);
        GradedOp c = testgen::random_graded_op(rng, 2, 2);
        CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
        CHECK(commutator(a, b) == -commutator(b, a));
        GradedOp jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                       commutator(c, commutator(a, b));
        CHECK(jac.is_zero());
        // bilinearity in the first slot
        Rat s = testgen::random_rat(rng);
        CHECK(commutator(a.scale(s) + b, c) == commutator(a, c).scale(s) + commutator(b, c));
    }
}

TEST_CASE("symbolic composition agrees with pointwise application") {
    std::mt19937 rng(31);
    for (int it = 0; it < 40; ++it) {
        GradedOp a = testgen::random_graded_op(rng);
        GradedOp b = testgen::random_graded_op(rng);
        GradedOp ab = a.compose(b);
        VermaVec v = testgen::random_verma(rng, 30);
        CHECK(ab.apply(v) == a.apply(b.apply(v)));
    }
}

TEST_CASE("bracket via compose agrees with direct action on monomials") {
    std::mt19937 rng(37);
    for (int it = 0; it < 40; ++it) {
        GradedOp a = testgen::random_graded_op(rng);
        GradedOp b = testgen::random_graded_op(rng);
        GradedOp br = commutator(a, b);
        for (int n = 0; n <= 12; ++n)
            CHECK(br.apply(VermaVec::monomial(n)) == bracket_by_action(a, b, n));
    }
}

TEST_CASE("truncation respects products on the interior window") {
    std::mt19937 rng(41);
    const int N = 12;
    for (int it = 0; it < 25; ++it) {
        GradedOp a = testgen::random_graded_op(rng, 2, 2);
        GradedOp b = testgen::random_graded_op(rng, 2, 2);
        QMatrix lhs = a.compose(b).truncate_to_matrix(N);
        QMatrix rhs = a.truncate_to_matrix(N) * b.truncate_to_matrix(N);
        int amax = a.max_shift(), amin = a.min_shift();
        int bmax = b.max_shift(), bmin = b.min_shift();
        for (int n = 0; n <= N; ++n) {
            bool interior = n + bmax <= N && n + bmin >= 0 && n + bmax + amax <= N &&
                            n + bmin + amin >= 0;
            if (!interior) continue;
            for (int r = 0; r <= N; ++r) CHECK(lhs.at(r, n) == rhs.at(r, n));
        }
    }
}
