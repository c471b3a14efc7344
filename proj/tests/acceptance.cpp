// Acceptance suite: one line per criterion, exit 0 iff all pass.
// Usage: acceptance [path-to-qrsym-cli]

#include "qrsym/witt_family.hpp"
#include "qrsym/witt_window.hpp"
#include "qrsym/composite.hpp"
#include "qrsym/burnside.hpp"
#include "qrsym/overlay.hpp"
#include "qrsym/suites.hpp"

#include "support/gen.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace qrsym;

namespace {

const std::vector<Rat> kWeights = {Rat(1, 2), Rat(1), Rat(3, 2), Rat(7, 3), Rat(5)};

std::string g_cli;

bool criterion_sl2() {
    for (const Rat& h : kWeights) {
        WeightParam w(h);
        auto sl2 = sl2_triple(w);
        auto L = [&sl2](int i) { return sl2[size_t(i + 1)]; };
        for (int i = -1; i <= 1; ++i)
            for (int j = -1; j <= 1; ++j) {
                GradedOp rhs =
                    std::abs(i + j) <= 1 ? L(i + j).scale(Rat(i - j)) : GradedOp::zero();
                if (!op_equal(commutator(L(i), L(j)), rhs)) return false;
            }
    }
    return true;
}

bool criterion_thm1a() {
    for (const Rat& h : kWeights) {
        WeightParam w(h);
        DefectReport rep = verify_theorem_1A(w, 6);
        if (!rep.in_piece_all_zero()) return false;
        const DefectEntry* cross = rep.find(2, -2);
        if (!cross || cross->zero) return false;
    }
    return true;
}

bool criterion_thm1b() {
    std::string rule;
    for (const Rat& h : kWeights) {
        WeightParam w(h);
        ExtendedDefectReport rep = verify_theorem_1B(w, 6);
        if (!rep.all_zero()) return false;
        if (rep.printed_rule_note.find("Jacobi") == std::string::npos) return false;
        if (rule.empty()) rule = rep.resolved_rule;
        if (rep.resolved_rule != rule) return false;
    }
    std::cout << "      resolved rule: " << rule
              << "; printed rule [e_i,f_j] = j f_j fails Jacobi\n";
    return true;
}

bool criterion_octahedron() {
    LieComposite oct = octahedron();
    MatrixRep model = octahedron_so4_model();
    if (!check_representation(oct, model).pass()) return false;
    PropositionReport base = verify_octahedron_proposition(model);
    if (!base.pass()) return false;
    for (const Rat& l : base.lambdas)
        if (!l.is_zero()) return false;

    std::mt19937 rng(2024);
    std::vector<int> vertices = {0, 1, 2, 3, 4, 5};
    std::shuffle(vertices.begin(), vertices.end(), rng);
    MatrixRep shifted = model;
    std::vector<std::pair<int, Rat>> injected;
    for (int k = 0; k < 3; ++k) {
        Rat mu = testgen::random_nonzero_rat(rng);
        injected.emplace_back(vertices[size_t(k)], mu);
        shifted.images[size_t(vertices[size_t(k)])] =
            shifted.images[size_t(vertices[size_t(k)])] + QMatrix::identity(4).scale(mu);
    }
    PropositionReport rep = verify_octahedron_proposition(shifted);
    if (!rep.pass()) return false;
    std::vector<Rat> expect(6, Rat(0));
    for (auto& [v, mu] : injected) expect[size_t(v)] = mu;
    return rep.lambdas == expect;
}

// Random small composite representations for the containment check.
struct SmallInstance {
    LieComposite c;
    MatrixRep T;
};

SmallInstance random_small_instance(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> mdist(2, 4);
    std::uniform_int_distribution<int> coin(0, 1);

    auto zero_table = [](int k) {
        return std::vector<std::vector<std::vector<Rat>>>(
            size_t(k), std::vector<std::vector<Rat>>(size_t(k), std::vector<Rat>(size_t(k), Rat(0))));
    };
    auto so3_table = [&zero_table]() {
        auto br = zero_table(3);
        for (int a = 0; a < 3; ++a) {
            br[size_t(a)][size_t((a + 1) % 3)][size_t((a + 2) % 3)] = Rat(1);
            br[size_t((a + 1) % 3)][size_t(a)][size_t((a + 2) % 3)] = Rat(-1);
        }
        return br;
    };
    auto sl2_table = [&zero_table]() {
        auto br = zero_table(3);
        br[0][1][2] = Rat(1);
        br[1][0][2] = Rat(-1);
        br[2][0][0] = Rat(2);
        br[0][2][0] = Rat(-2);
        br[2][1][1] = Rat(-2);
        br[1][2][1] = Rat(2);
        return br;
    };

    int kinds[2] = {pick(rng), pick(rng)};
    int dims[2] = {kinds[0] == 0 ? 2 : 3, kinds[1] == 0 ? 2 : 3};
    bool two_pieces = coin(rng) && dims[0] + dims[1] <= 5;
    int ambient = two_pieces ? dims[0] + dims[1] : dims[0];

    std::vector<CompositePiece> pieces;
    int base = 0;
    int npieces = two_pieces ? 2 : 1;
    for (int pi = 0; pi < npieces; ++pi) {
        CompositePiece p;
        p.name = "p" + std::to_string(pi);
        p.basis = QMatrix(ambient, dims[pi]);
        for (int j = 0; j < dims[pi]; ++j) p.basis.at(base + j, j) = Rat(1);
        p.bracket = kinds[pi] == 0 ? zero_table(2) : (kinds[pi] == 1 ? so3_table() : sl2_table());
        pieces.push_back(std::move(p));
        base += dims[pi];
    }
    std::vector<std::string> labels;
    for (int i = 0; i < ambient; ++i) labels.push_back("v" + std::to_string(i));
    LieComposite c(ambient, std::move(labels), std::move(pieces));

    int m = mdist(rng);
    MatrixRep T = MatrixRep::zero(ambient, m);
    bool honest = coin(rng);
    base = 0;
    for (int pi = 0; pi < npieces; ++pi) {
        if (honest) {
            if (kinds[pi] == 0) {
                for (int j = 0; j < dims[pi]; ++j)
                    for (int r = 0; r < m; ++r)
                        T.images[size_t(base + j)].at(r, r) = testgen::random_rat(rng, 3);
            } else if (kinds[pi] == 1 && m >= 3) {
                auto put = [&](int v, int r, int cc, int val) {
                    T.images[size_t(base + v)].at(r, cc) = Rat(val);
                };
                put(0, 2, 1, 1); put(0, 1, 2, -1);
                put(1, 0, 2, 1); put(1, 2, 0, -1);
                put(2, 1, 0, 1); put(2, 0, 1, -1);
            } else if (kinds[pi] == 2) {
                T.images[size_t(base + 0)].at(0, 1) = Rat(1);
                T.images[size_t(base + 1)].at(1, 0) = Rat(1);
                T.images[size_t(base + 2)].at(0, 0) = Rat(1);
                T.images[size_t(base + 2)].at(1, 1) = Rat(-1);
            }
            // so(3) with m < 3 stays the zero rep
        } else {
            for (int j = 0; j < dims[pi]; ++j)
                for (int r = 0; r < m; ++r)
                    for (int cc = 0; cc < m; ++cc)
                        T.images[size_t(base + j)].at(r, cc) = testgen::random_rat(rng, 2);
        }
        base += dims[pi];
    }
    return {std::move(c), std::move(T)};
}

bool criterion_containment() {
    std::mt19937 rng(77);
    for (int it = 0; it < 25; ++it) {
        SmallInstance inst = random_small_instance(rng);
        OperatorComposite lc = build_LC(Decomposition::trivial(inst.T.target_dim));
        std::vector<int> assign(inst.c.pieces().size(), 0);
        OverlayReport over = is_overlay_rep(inst.c, inst.T, lc, assign);
        RepReport plain = check_representation(inst.c, inst.T);
        if (over.pass() != plain.pass()) return false;
        size_t brackets = 0;
        for (const auto& v : over.violations)
            if (v.kind == "bracket") ++brackets;
        if (brackets != plain.violations.size()) return false;
    }
    return true;
}

bool criterion_tensor_burnside() {
    WeightParam w1(Rat(1)), w2(Rat(3, 2));
    WittIndexMap r1(w1), r2(w2);
    std::vector<QMatrix> a, b;
    for (int i = -2; i <= 2; ++i) {
        a.push_back(r1.op(i).truncate_to_matrix(6));
        b.push_back(r2.op(i).truncate_to_matrix(6));
    }
    if (!burnside_irreducible(a)) return false;

    TruncatedWittComposite comp(2, false);
    if (!tensor_window_rep_check(comp, r1, 6, r2, 6).pass()) return false;

    if (!burnside_irreducible_tensor(a, b)) return false;
    std::cout << "      finding: window V_1 (x) V_{3/2} stays Burnside-irreducible, "
                 "matching the tensor-product claim\n";
    return true;
}

int run_cli(const std::string& args) {
    int rc = std::system((g_cli + " " + args).c_str());
    return rc < 0 ? rc : WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool criterion_determinism() {
    if (g_cli.empty()) {
        std::cout << "      no CLI path given\n";
        return false;
    }
    // byte-identical JSON across two invocations of the same config
    std::string cfg = "/tmp/qrsym_accept.cfg";
    {
        std::ofstream out(cfg);
        out << "h=1,3/2\nK=4\nN=4\nsuites=sl2,thm1a,thm1b\nformat=json\n";
    }
    if (run_cli("run --config " + cfg + " --out /tmp/qrsym_a.json 2>/dev/null") != 0) return false;
    if (run_cli("run --config " + cfg + " --out /tmp/qrsym_b.json 2>/dev/null") != 0) return false;
    std::string a = slurp("/tmp/qrsym_a.json"), b = slurp("/tmp/qrsym_b.json");
    if (a.empty() || a != b) return false;

    // defect CSV for (h=1, K=4), stable under re-ordered internal iteration
    if (run_cli("run --h 1 --K 4 --suites thm1a --format csv --out /tmp/qrsym_a.csv 2>/dev/null") != 0)
        return false;
    std::string csv = slurp("/tmp/qrsym_a.csv");
    WeightParam w(Rat(1));
    std::vector<std::pair<int, int>> pairs;
    for (int i = -4; i <= 4; ++i)
        for (int j = -4; j <= 4; ++j)
            if (std::abs(i + j) <= 4) pairs.emplace_back(i, j);
    std::mt19937 rng(5);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    DefectReport shuffled = make_defect_report(w, 4, pairs);
    if (shuffled.to_csv() != csv) return false;

    // exit-status contract: bad config is a usage error
    if (run_cli("run --K 1 2>/dev/null >/dev/null") != 2) return false;
    return true;
}

bool criterion_oracle_crosscheck() {
    std::mt19937 rng(4242);
    for (int it = 0; it < 100; ++it) {
        GradedOp a = testgen::random_graded_op(rng);
        GradedOp b = testgen::random_graded_op(rng);
        GradedOp br = commutator(a, b);
        for (int n = 0; n <= 30; ++n) {
            VermaVec zn = VermaVec::monomial(n);
            VermaVec direct = a.apply(b.apply(zn)) - b.apply(a.apply(zn));
            if (br.apply(zn) != direct) return false;
        }
    }
    return true;
}

struct Criterion {
    int id;
    std::string name;
    double budget_s;  // 0 = no budget stated
    std::function<bool()> fn;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];

    std::vector<Criterion> criteria = {
        {1, "sl(2) relations, all sampled weights", 1.0, criterion_sl2},
        {2, "theorem 1A defect table at K=6", 10.0, criterion_thm1a},
        {3, "theorem 1B extended closure at K=6", 10.0, criterion_thm1b},
        {4, "octahedron proposition with lambda recovery", 5.0, criterion_octahedron},
        {5, "composite representations embed in overlay checks", 0.0, criterion_containment},
        {6, "window and tensor-window Burnside findings", 60.0, criterion_tensor_burnside},
        {7, "deterministic reports and exit codes", 0.0, criterion_determinism},
        {8, "bracket oracle cross-check on random operators", 0.0, criterion_oracle_crosscheck},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string err;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            err = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = c.budget_s == 0.0 || secs < c.budget_s;
        bool pass = ok && in_budget;
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << "  ["
             << secs << " s";
        if (c.budget_s > 0) line << " / budget " << c.budget_s << " s";
        line << "]";
        if (!err.empty()) line << "  error: " << err;
        std::cout << line.str() << "\n";
        if (!pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
