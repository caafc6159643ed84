#include "chromastar/subspace.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "chromastar/analysis.hpp"

namespace chromastar {

CsfMatrix csf_matrix(int n, int jobs) {
    if (n < 3) throw std::invalid_argument("csf_matrix requires n >= 3");
    std::vector<Forest> trees = enumerate_free_trees(n);
    std::vector<std::pair<std::string, const Forest*>> order;
    order.reserve(trees.size());
    for (const auto& t : trees) order.emplace_back(canonical_code(t), &t);
    std::sort(order.begin(), order.end());

    CsfMatrix m;
    m.n = n;
    m.columns = partitions_of(n);
    m.row_trees.reserve(order.size());
    for (const auto& [code, t] : order) m.row_trees.push_back(code);
    m.entries.assign(order.size(), {});

    jobs = std::max(1, jobs);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < order.size(); i = next.fetch_add(1)) {
            StarPoly x = star_expand(*order[i].second);
            std::vector<i64> row;
            row.reserve(m.columns.size());
            for (const auto& col : m.columns) row.push_back(x.coefficient(col));
            m.entries[i] = std::move(row);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return m;
}

int exact_rank(const CsfMatrix& m) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(m.entries.size());
    for (const auto& r : m.entries) rows.emplace_back(r.begin(), r.end());
    return exact_rank(std::move(rows));
}

int exact_rank(std::vector<std::vector<BigInt>> a) {
    size_t rows = a.size();
    if (rows == 0) return 0;
    size_t cols = a[0].size();
    size_t r = 0; // pivot row
    BigInt prev = 1;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        const BigInt pivot = a[r][c];
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * pivot - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = pivot;
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<Forest> caterpillar_basis(int n) {
    if (n < 1) throw std::invalid_argument("caterpillar_basis requires n >= 1");
    std::vector<Forest> out;
    for (const Partition& mu : partitions_of(n)) {
        if (is_hook(mu)) continue;
        if (mu.length() == 1) {
            out.push_back(star(n));
            continue;
        }
        std::vector<int> seq(mu.parts().begin() + 1, mu.parts().end());
        seq.push_back(mu.part(0));
        out.push_back(caterpillar(seq));
    }
    return out;
}

BasisExpansion express_in_basis(const StarPoly& f) {
    BasisExpansion out{f, {}};
    if (f.is_zero()) return out;
    int n = f.degree();

    // Basis in increasing leading-partition order; forward substitution on
    // the leading coefficients. Rational coefficients: pivots are the
    // caterpillar leading coefficients, which can exceed 1 in magnitude.
    struct Elem {
        Partition mu;
        StarPoly x;
        i64 lead_coeff;
    };
    std::vector<Elem> basis;
    for (const Forest& c : caterpillar_basis(n)) {
        StarPoly x = star_expand(c);
        LeadingTerm lt = leading_term(x);
        basis.push_back({lt.partition, std::move(x), lt.coeff});
    }

    // Residual bookkeeping over rationals.
    std::map<Partition, Rational> residual;
    for (const auto& [k, c] : f.terms()) residual[k] = c;
    auto smallest = [&]() -> const Partition* {
        for (const auto& [k, c] : residual)
            if (c != 0) return &k;
        return nullptr;
    };
    for (const Elem& e : basis) {
        const Partition* key = smallest();
        if (!key) break;
        if (*key < e.mu) throw std::invalid_argument("express_in_basis: input outside the span");
        if (!(*key == e.mu)) continue;
        Rational coeff = residual[e.mu] / e.lead_coeff;
        for (const auto& [k, c] : e.x.terms()) residual[k] -= coeff * c;
        out.coefficients[e.mu] = std::move(coeff);
    }
    if (smallest()) throw std::invalid_argument("express_in_basis: input outside the span");
    return out;
}

bool check_length_sums(const StarPoly& f, int cc) {
    std::map<int, i64> by_length;
    for (const auto& [k, c] : f.terms()) by_length[k.length()] = checked_add(by_length[k.length()], c);
    for (const auto& [len, total] : by_length)
        if (len > cc && total != 0) return false;
    return true;
}

TwoEdgeRelationCheck two_edge_relation(int a, int b, int c) {
    if (!(a >= b && b >= c && c >= 1)) throw std::invalid_argument("two_edge_relation requires a >= b >= c >= 1");
    auto x = [](std::vector<int> seq) { return star_expand(caterpillar(std::move(seq))); };
    TwoEdgeRelationCheck out;
    {
        StarPoly rhs = x({b, c, a});
        rhs -= x({b, 1, a + c - 1});
        rhs += x({b + 1, a + c - 1});
        rhs += x({c, 1, a + b - 1});
        rhs -= x({c + 1, a + b - 1});
        out.eq_a = (x({a, b, c}) == rhs);
    }
    {
        StarPoly rhs = x({b, c, a});
        rhs -= x({a, 1, b + c - 1});
        rhs += x({a + 1, b + c - 1});
        rhs += x({c, 1, a + b - 1});
        rhs -= x({c + 1, a + b - 1});
        out.eq_b = (x({b, a, c}) == rhs);
    }
    return out;
}

} // namespace chromastar
