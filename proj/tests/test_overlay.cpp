#include "doctest.h"

#include "qrsym/overlay.hpp"
#include "qrsym/witt_window.hpp"

#include <random>

using namespace qrsym;

namespace {

// Composite with an so(3) piece in coordinates 0..2 and an sl(2) piece in
// 3..5; intersection is zero, so glueing is vacuous.
LieComposite block_composite() {
    auto so3 = std::vector<std::vector<std::vector<Rat>>>(
        3, std::vector<std::vector<Rat>>(3, std::vector<Rat>(3, Rat(0))));
    for (int a = 0; a < 3; ++a) {
        int b = (a + 1) % 3, t = (a + 2) % 3;
        so3[size_t(a)][size_t(b)][size_t(t)] = Rat(1);
        so3[size_t(b)][size_t(a)][size_t(t)] = Rat(-1);
    }
    auto sl2 = std::vector<std::vector<std::vector<Rat>>>(
        3, std::vector<std::vector<Rat>>(3, std::vector<Rat>(3, Rat(0))));
    // basis order (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f
    sl2[0][1][2] = Rat(1);
    sl2[1][0][2] = Rat(-1);
    sl2[2][0][0] = Rat(2);
    sl2[0][2][0] = Rat(-2);
    sl2[2][1][1] = Rat(-2);
    sl2[1][2][1] = Rat(2);

    CompositePiece p1{"rot", QMatrix(6, 3), so3};
    CompositePiece p2{"sl2", QMatrix(6, 3), sl2};
    for (int j = 0; j < 3; ++j) {
        p1.basis.at(j, j) = Rat(1);
        p2.basis.at(j + 3, j) = Rat(1);
    }
    return LieComposite(6, {"x", "y", "z", "e", "f", "h"}, {p1, p2});
}

// so(3) generators as 3x3 rotation matrices; sl(2) in its 2x2 rep.
MatrixRep block_rep() {
    MatrixRep T = MatrixRep::zero(6, 5);
    auto put = [&T](int v, int r, int c, Rat val) { T.images[size_t(v)].at(r, c) = val; };
    // so(3) into the top-left 3x3 block
    put(0, 2, 1, Rat(1)); put(0, 1, 2, Rat(-1));
    put(1, 0, 2, Rat(1)); put(1, 2, 0, Rat(-1));
    put(2, 1, 0, Rat(1)); put(2, 0, 1, Rat(-1));
    // sl(2) into the bottom-right 2x2 block
    put(3, 3, 4, Rat(1));
    put(4, 4, 3, Rat(1));
    put(5, 3, 3, Rat(1)); put(5, 4, 4, Rat(-1));
    return T;
}

}  // namespace

TEST_CASE("decomposition shapes and LC piece dimensions") {
    OperatorComposite lc1 = build_LC(Decomposition::trivial(2));
    CHECK(lc1.pieces() == 1);
    CHECK(lc1.piece_dim(0) == 4);
    CHECK(lc1.piece_contains(0, QMatrix::identity(2)));

    OperatorComposite lc2 = build_LC(Decomposition::bands(2, {{0, 0}, {1, 1}}));
    CHECK(lc2.piece_dim(0) == 1);
    CHECK(lc2.piece_dim(1) == 1);
    QMatrix e00(2, 2);
    e00.at(0, 0) = Rat(1);
    CHECK(lc2.piece_contains(0, e00));
    CHECK(!lc2.piece_contains(1, e00));

    OperatorComposite lc3 = build_LC(Decomposition::bands(3, {{0, 1}, {2, 2}}));
    CHECK(lc3.piece_dim(0) == 4);
    CHECK(lc3.piece_dim(1) == 1);
}

TEST_CASE("non-direct decompositions are rejected with a diagnostic") {
    QMatrix s1 = QMatrix::identity(2);
    QMatrix s2(2, 1);
    s2.at(0, 0) = Rat(1);
    Decomposition d(2, {s1, s2});
    CHECK(!d.direct());
    CHECK_THROWS_WITH_AS(build_LC(d), doctest::Contains("not direct"), std::domain_error);
}

TEST_CASE("overlay check with the trivial decomposition equals the plain check") {
    LieComposite oct = octahedron();
    OperatorComposite lc = build_LC(Decomposition::trivial(4));
    MatrixRep model = octahedron_so4_model();
    OverlayReport over = is_overlay_rep(oct, model, lc, {0, 0, 0, 0});
    RepReport plain = check_representation(oct, model);
    CHECK(over.pass() == plain.pass());
    CHECK(over.pass());

    // break one image; the two checks must agree again
    model.images[2].at(0, 0) += Rat(1);
    OverlayReport over2 = is_overlay_rep(oct, model, lc, {0, 0, 0, 0});
    RepReport plain2 = check_representation(oct, model);
    CHECK(over2.pass() == plain2.pass());
    CHECK(!over2.pass());
    // same violating bracket pairs
    size_t brackets = 0;
    for (const auto& v : over2.violations)
        if (v.kind == "bracket") ++brackets;
    CHECK(brackets == plain2.violations.size());
}

TEST_CASE("block-supported example passes; swapping the assignment fails") {
    LieComposite c = block_composite();
    MatrixRep T = block_rep();
    CHECK(check_representation(c, T).pass());
    OperatorComposite lc = build_LC(Decomposition::bands(5, {{0, 2}, {3, 4}}));
    CHECK(is_overlay_rep(c, T, lc, {0, 1}).pass());
    OverlayReport swapped = is_overlay_rep(c, T, lc, {1, 0});
    CHECK(!swapped.pass());
    CHECK(swapped.violations.front().kind == "containment");
}

TEST_CASE("glueing forces intersection images into both blocks") {
    // Two pieces sharing the direction x; T sends x into block 0 only.
    auto zero2 = std::vector<std::vector<std::vector<Rat>>>(
        2, std::vector<std::vector<Rat>>(2, std::vector<Rat>(2, Rat(0))));
    CompositePiece p1{"p1", QMatrix(3, 2), zero2};
    p1.basis.at(0, 0) = Rat(1);
    p1.basis.at(1, 1) = Rat(1);
    CompositePiece p2{"p2", QMatrix(3, 2), zero2};
    p2.basis.at(0, 0) = Rat(1);
    p2.basis.at(2, 1) = Rat(1);
    LieComposite c(3, {"x", "y", "z"}, {p1, p2});

    MatrixRep T = MatrixRep::zero(3, 4);
    T.images[0].at(0, 1) = Rat(1);  // x -> block 0 nilpotent
    OperatorComposite lc = build_LC(Decomposition::bands(4, {{0, 1}, {2, 3}}));
    OverlayReport rep = is_overlay_rep(c, T, lc, {0, 1});
    CHECK(!rep.pass());
    bool has_glueing = false;
    for (const auto& v : rep.violations) has_glueing = has_glueing || v.kind == "glueing";
    CHECK(has_glueing);

    // zero on the intersection repairs it
    T.images[0] = QMatrix(4, 4);
    CHECK(is_overlay_rep(c, T, lc, {0, 1}).pass());
}

TEST_CASE("theorem 1C window search over graded bands") {
    WeightParam w(Rat(1));
    for (int spin : {1, 2}) {
        WindowSearchReport rep = theorem_1C_window(w, 6, spin);
        CHECK(rep.candidates.size() == 64);
        // trivial decomposition heads the enumeration and passes
        REQUIRE(rep.candidates[0].bands.size() == 1);
        CHECK(rep.candidates[0].pass);
        // graded shifts cannot be block-supported: every other candidate fails
        for (size_t i = 1; i < rep.candidates.size(); ++i) {
            CHECK(!rep.candidates[i].pass);
            CHECK(!rep.candidates[i].first_violation.empty());
        }
    }
    CHECK_THROWS_AS(theorem_1C_window(w, 3, 2), std::domain_error);
    CHECK_THROWS_AS(theorem_1C_window(w, 6, 3), std::domain_error);

    // deterministic output
    CHECK(theorem_1C_window(w, 5, 2).to_json() == theorem_1C_window(w, 5, 2).to_json());
}

TEST_CASE("window reports for the truncated composite") {
    WeightParam w1(Rat(1)), w2(Rat(3, 2));
    WittIndexMap r1(w1), r2(w2);
    TruncatedWittComposite comp(2, true);
    WindowCheckReport rep = window_rep_check(comp, r1, 8);
    CHECK(rep.pass());
    CHECK(rep.checked_pairs > 0);
    WindowCheckReport trep = tensor_window_rep_check(comp, r1, 5, r2, 5);
    CHECK(trep.pass());
}

TEST_CASE("truncated composite window contract") {
    TruncatedWittComposite c(3, false);
    CHECK(c.basis().size() == 7);
    CHECK(c.window_closed(1, 2));
    CHECK(!c.window_closed(2, 2));
    auto br = c.bracket({'e', 1}, {'e', 2});
    REQUIRE(br.has_value());
    CHECK(br->coeff == Rat(-1));
    CHECK(br->label.index == 3);
    CHECK(!c.bracket({'e', 2}, {'e', 2}).has_value());   // not window-closed
    CHECK(!c.bracket({'e', 2}, {'e', -2}).has_value());  // cross-piece
    auto inter = c.piece_intersection();
    CHECK(inter.size() == 3);
    CHECK_THROWS_AS(TruncatedWittComposite(1, false), std::domain_error);
}
