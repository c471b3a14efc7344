#include "qrsym/burnside.hpp"

#include <map>
#include <deque>
#include <stdexcept>

namespace qrsym {

namespace {

// ---------------------------------------------------------------- exact

using SpVec = std::vector<std::pair<int, Rat>>;  // sorted by index

SpVec sparse_of_matrix(const QMatrix& m) {
    SpVec v;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) v.emplace_back(i * m.cols() + j, m.at(i, j));
    return v;
}

SpVec axpy(const SpVec& v, const Rat& c, const SpVec& w) {
    // v - c*w, merged by index
    SpVec out;
    out.reserve(v.size() + w.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j >= w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(v[i++]);
        } else if (i >= v.size() || w[j].first < v[i].first) {
            out.emplace_back(w[j].first, -(c * w[j].second));
            ++j;
        } else {
            Rat s = v[i].second - c * w[j].second;
            if (!s.is_zero()) out.emplace_back(v[i].first, s);
            ++i;
            ++j;
        }
    }
    return out;
}

struct ExactEchelon {
    std::map<int, SpVec> rows;  // pivot index -> row with pivot coeff 1

    // Returns true if v was independent (and inserts its reduction).
    bool insert(SpVec v) {
        while (!v.empty()) {
            auto it = rows.find(v.front().first);
            if (it == rows.end()) break;
            v = axpy(v, v.front().second, it->second);
        }
        if (v.empty()) return false;
        Rat inv = v.front().second.inverse();
        for (auto& [idx, val] : v) val *= inv;
        rows.emplace(v.front().first, std::move(v));
        return true;
    }
    int dim() const { return int(rows.size()); }
};

// Sparse n x n product of flattened vectors.
SpVec sparse_mul(const SpVec& a, const SpVec& b, int n) {
    // Row-bucket b for cache-friendly access.
    std::vector<std::vector<std::pair<int, const Rat*>>> brows;
    brows.resize(size_t(n));
    for (const auto& [idx, val] : b) brows[size_t(idx / n)].emplace_back(idx % n, &val);
    std::map<int, Rat> acc;
    for (const auto& [idx, val] : a) {
        int i = idx / n, k = idx % n;
        for (const auto& [j, bv] : brows[size_t(k)]) {
            Rat& slot = acc[i * n + j];
            slot += val * (*bv);
        }
    }
    SpVec out;
    for (auto& [idx, val] : acc)
        if (!val.is_zero()) out.emplace_back(idx, std::move(val));
    return out;
}

int exact_closure_dim(const std::vector<SpVec>& gens, int n, int cap) {
    ExactEchelon ech;
    std::deque<SpVec> work;
    auto push = [&](SpVec v) {
        if (ech.dim() >= cap) return;
        SpVec copy = v;
        if (ech.insert(std::move(copy))) work.push_back(std::move(v));
    };
    SpVec id;
    for (int i = 0; i < n; ++i) id.emplace_back(i * n + i, Rat(1));
    push(id);
    for (const auto& g : gens) push(g);
    while (!work.empty() && ech.dim() < cap) {
        SpVec w = std::move(work.front());
        work.pop_front();
        for (const auto& g : gens) {
            push(sparse_mul(g, w, n));
            if (ech.dim() >= cap) break;
            push(sparse_mul(w, g, n));
            if (ech.dim() >= cap) break;
        }
    }
    return ech.dim();
}

// ---------------------------------------------------------------- mod p

constexpr std::uint64_t kPrimes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL};

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

using SpVecP = std::vector<std::pair<int, std::uint64_t>>;

SpVecP axpy_p(const SpVecP& v, std::uint64_t c, const SpVecP& w, std::uint64_t p) {
    // v - c*w
    SpVecP out;
    out.reserve(v.size() + w.size());
    size_t i = 0, j = 0;
    std::uint64_t neg = p - c % p;
    while (i < v.size() || j < w.size()) {
        if (j >= w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(v[i++]);
        } else if (i >= v.size() || w[j].first < v[i].first) {
            std::uint64_t s = neg * w[j].second % p;
            if (s) out.emplace_back(w[j].first, s);
            ++j;
        } else {
            std::uint64_t s = (v[i].second + neg * w[j].second) % p;
            if (s) out.emplace_back(v[i].first, s);
            ++i;
            ++j;
        }
    }
    return out;
}

struct ModEchelon {
    std::uint64_t p;
    std::map<int, SpVecP> rows;

    bool insert(SpVecP v) {
        while (!v.empty()) {
            auto it = rows.find(v.front().first);
            if (it == rows.end()) break;
            v = axpy_p(v, v.front().second, it->second, p);
        }
        if (v.empty()) return false;
        std::uint64_t inv = inv_mod(v.front().second, p);
        for (auto& [idx, val] : v) val = val * inv % p;
        rows.emplace(v.front().first, std::move(v));
        return true;
    }
    int dim() const { return int(rows.size()); }
};

SpVecP flatten_rows(const SparseModMat& m) {
    SpVecP v;
    for (int i = 0; i < m.n; ++i)
        for (const auto& [j, val] : m.rows[size_t(i)]) v.emplace_back(i * m.n + j, val);
    return v;
}

SparseModMat sparse_mul_p(const SparseModMat& a, const SparseModMat& b, std::uint64_t p) {
    SparseModMat c;
    c.n = a.n;
    c.rows.resize(size_t(a.n));
    std::vector<std::uint64_t> acc(size_t(a.n), 0);
    std::vector<int> touched;
    for (int i = 0; i < a.n; ++i) {
        touched.clear();
        for (const auto& [k, av] : a.rows[size_t(i)])
            for (const auto& [j, bv] : b.rows[size_t(k)]) {
                if (!acc[size_t(j)] && (av * bv % p)) touched.push_back(j);
                acc[size_t(j)] = (acc[size_t(j)] + av * bv) % p;
            }
        std::sort(touched.begin(), touched.end());
        for (int j : touched) {
            if (acc[size_t(j)]) c.rows[size_t(i)].emplace_back(j, acc[size_t(j)]);
            acc[size_t(j)] = 0;
        }
    }
    return c;
}

}  // namespace

bool reduce_mod_p(const QMatrix& m, std::uint64_t p, SparseModMat& out) {
    out.n = m.rows();
    out.rows.assign(size_t(m.rows()), {});
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& x = m.at(i, j);
            if (x.is_zero()) continue;
            Int num = x.num() % Int(static_cast<unsigned long>(p));
            Int den = x.den() % Int(static_cast<unsigned long>(p));
            if (den == 0) return false;
            std::uint64_t n64 = (num < 0 ? num + Int(static_cast<unsigned long>(p)) : num).get_ui();
            std::uint64_t d64 = den.get_ui();
            std::uint64_t val = n64 % p * inv_mod(d64, p) % p;
            if (val) out.rows[size_t(i)].emplace_back(j, val);
        }
    return true;
}

int algebra_dimension_mod_p(const std::vector<SparseModMat>& ops, std::uint64_t p, int cap) {
    if (ops.empty()) throw std::domain_error("algebra_dimension_mod_p: empty op list");
    int n = ops[0].n;
    ModEchelon ech;
    ech.p = p;
    std::deque<SparseModMat> work;
    auto push = [&](const SparseModMat& m) {
        if (ech.dim() >= cap) return;
        if (ech.insert(flatten_rows(m))) work.push_back(m);
    };
    SparseModMat id;
    id.n = n;
    id.rows.resize(size_t(n));
    for (int i = 0; i < n; ++i) id.rows[size_t(i)].emplace_back(i, 1);
    push(id);
    for (const auto& g : ops) push(g);
    while (!work.empty() && ech.dim() < cap) {
        SparseModMat w = std::move(work.front());
        work.pop_front();
        for (const auto& g : ops) {
            push(sparse_mul_p(g, w, p));
            if (ech.dim() >= cap) break;
            push(sparse_mul_p(w, g, p));
            if (ech.dim() >= cap) break;
        }
    }
    return ech.dim();
}

int algebra_dimension(const std::vector<QMatrix>& ops) {
    if (ops.empty()) throw std::domain_error("algebra_dimension: empty op list");
    int n = ops[0].rows();
    std::vector<SpVec> gens;
    for (const auto& m : ops) {
        if (m.rows() != n || m.cols() != n)
            throw std::domain_error("algebra_dimension: operators must be square, equal size");
        gens.push_back(sparse_of_matrix(m));
    }
    return exact_closure_dim(gens, n, n * n);
}

bool burnside_irreducible(const std::vector<QMatrix>& ops) {
    if (ops.empty()) throw std::domain_error("burnside_irreducible: empty op list");
    int n = ops[0].rows();
    int cap = n * n;
    // A full closure mod p certifies the exact answer; only short closures
    // need the rational computation.
    for (std::uint64_t p : kPrimes) {
        std::vector<SparseModMat> red(ops.size());
        bool ok = true;
        for (size_t i = 0; i < ops.size() && ok; ++i) ok = reduce_mod_p(ops[i], p, red[i]);
        if (!ok) continue;
        if (algebra_dimension_mod_p(red, p, cap) == cap) return true;
        break;
    }
    return algebra_dimension(ops) == cap;
}

SparseModMat kron_leibniz_mod_p(const SparseModMat& a, const SparseModMat& b, std::uint64_t p) {
    SparseModMat out;
    out.n = a.n * b.n;
    out.rows.resize(size_t(out.n));
    // a (x) 1
    for (int i = 0; i < a.n; ++i)
        for (const auto& [j, val] : a.rows[size_t(i)])
            for (int q = 0; q < b.n; ++q) out.rows[size_t(i * b.n + q)].emplace_back(j * b.n + q, val);
    // 1 (x) b
    for (int pr = 0; pr < b.n; ++pr)
        for (const auto& [q, val] : b.rows[size_t(pr)])
            for (int i = 0; i < a.n; ++i) {
                auto& row = out.rows[size_t(i * b.n + pr)];
                row.emplace_back(i * b.n + q, val);
            }
    for (auto& row : out.rows) {
        std::sort(row.begin(), row.end());
        std::vector<std::pair<int, std::uint64_t>> merged;
        for (const auto& [c, v] : row) {
            if (!merged.empty() && merged.back().first == c)
                merged.back().second = (merged.back().second + v) % p;
            else
                merged.emplace_back(c, v);
        }
        std::erase_if(merged, [](const auto& e) { return e.second == 0; });
        row = std::move(merged);
    }
    return out;
}

bool burnside_irreducible_tensor(const std::vector<QMatrix>& a, const std::vector<QMatrix>& b) {
    if (a.empty() || a.size() != b.size())
        throw std::domain_error("burnside_irreducible_tensor: operator lists must match");
    int n = a[0].rows() * b[0].rows();
    int cap = n * n;
    for (std::uint64_t p : kPrimes) {
        std::vector<SparseModMat> gens;
        bool ok = true;
        for (size_t i = 0; i < a.size() && ok; ++i) {
            SparseModMat ra, rb;
            ok = reduce_mod_p(a[i], p, ra) && reduce_mod_p(b[i], p, rb);
            if (ok) gens.push_back(kron_leibniz_mod_p(ra, rb, p));
        }
        if (!ok) continue;
        if (algebra_dimension_mod_p(gens, p, cap) == cap) return true;
        break;
    }
    // Exact fallback; feasible because closure vectors stay sparse.
    std::vector<QMatrix> gens;
    QMatrix ia = QMatrix::identity(a[0].rows());
    QMatrix ib = QMatrix::identity(b[0].rows());
    for (size_t i = 0; i < a.size(); ++i) gens.push_back(a[i].kron(ib) + ia.kron(b[i]));
    return algebra_dimension(gens) == cap;
}

}  // namespace qrsym
