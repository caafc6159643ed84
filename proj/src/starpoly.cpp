#include "chromastar/starpoly.hpp"

#include <random>
#include <stdexcept>
#include <unordered_map>

namespace chromastar {

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in +");
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in *");
    return r;
}

i64 binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    i64 r = 1;
    for (int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

StarPoly::StarPoly(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
}

StarPoly StarPoly::unit() {
    StarPoly p(0);
    p.terms_[Partition{}] = 1;
    return p;
}

StarPoly StarPoly::single(const Partition& key, i64 coeff) {
    StarPoly p(key.weight());
    if (coeff != 0) p.terms_[key] = coeff;
    return p;
}

i64 StarPoly::coefficient(const Partition& key) const {
    if (key.weight() != degree_) throw std::invalid_argument("coefficient: weight mismatch");
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
}

void StarPoly::add_term(const Partition& key, i64 c) {
    if (key.weight() != degree_) throw std::invalid_argument("add_term: weight mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

StarPoly& StarPoly::operator+=(const StarPoly& o) {
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in +");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

StarPoly& StarPoly::operator-=(const StarPoly& o) {
    if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch in -");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

StarPoly multiply(const StarPoly& f, const StarPoly& g) {
    StarPoly out(f.degree() + g.degree());
    for (const auto& [kf, cf] : f.terms())
        for (const auto& [kg, cg] : g.terms())
            out.add_term(sort_concat(kf, kg), checked_mul(cf, cg));
    return out;
}

StarPoly divide_exact(const StarPoly& product, const StarPoly& divisor) {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (product.degree() < divisor.degree()) throw std::invalid_argument("degree underflow in division");
    const auto& [dkey, dcoeff] = *divisor.terms().begin(); // lex-smallest term
    Multiset dms = multiset_of(dkey);
    StarPoly q(product.degree() - divisor.degree());
    StarPoly r = product;
    while (!r.is_zero()) {
        const auto& [rkey, rcoeff] = *r.terms().begin();
        // rkey must contain dkey as a sub-multiset and the coefficient must
        // divide exactly, else there is no quotient.
        Multiset rms = multiset_of(rkey);
        for (const auto& [v, m] : dms) {
            if (multiset_count(rms, v) < m) throw std::invalid_argument("not divisible (key)");
            rms[v] -= m;
        }
        if (rcoeff % dcoeff != 0) throw std::invalid_argument("not divisible (coefficient)");
        std::vector<int> nu_parts;
        for (const auto& [v, m] : rms)
            for (int i = 0; i < m; ++i) nu_parts.push_back(v);
        Partition nu(std::move(nu_parts));
        i64 c = rcoeff / dcoeff;
        q.add_term(nu, c);
        r -= multiply(divisor, StarPoly::single(nu, c));
    }
    return q;
}

namespace {

Edge pick_internal_edge(const std::vector<Edge>& internal, const ExpandOptions& opt, std::mt19937_64& rng) {
    if (!opt.shuffle_edges) return internal.front();
    return internal[rng() % internal.size()];
}

StarPoly expand_memo(const Forest& f, const ExpandOptions& opt, std::mt19937_64& rng,
                     std::unordered_map<std::string, StarPoly>& memo) {
    std::vector<Edge> internal = f.internal_edges();
    if (internal.empty()) return StarPoly::single(f.component_partition());
    std::string key = canonical_code(f);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Edge e = pick_internal_edge(internal, opt, rng);
    StarPoly res = expand_memo(f.delete_edge(e), opt, rng, memo);
    res -= expand_memo(f.dot_contract(e), opt, rng, memo);
    res += expand_memo(f.leaf_contract(e), opt, rng, memo);
    memo.emplace(std::move(key), res);
    return res;
}

} // namespace

StarPoly star_expand(const Forest& f, const ExpandOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    if (opt.memoize) {
        std::unordered_map<std::string, StarPoly> memo;
        return expand_memo(f, opt, rng, memo);
    }
    StarPoly acc(f.vertex_count());
    std::vector<std::pair<Forest, int>> work;
    work.emplace_back(f, 1);
    while (!work.empty()) {
        auto [h, sign] = std::move(work.back());
        work.pop_back();
        std::vector<Edge> internal = h.internal_edges();
        if (internal.empty()) {
            acc.add_term(h.component_partition(), sign);
            continue;
        }
        Edge e = pick_internal_edge(internal, opt, rng);
        work.emplace_back(h.delete_edge(e), sign);
        work.emplace_back(h.dot_contract(e), -sign);
        work.emplace_back(h.leaf_contract(e), sign);
    }
    return acc;
}

StarPoly power_to_star(int r) {
    if (r < 1) throw std::invalid_argument("power_to_star requires r >= 1");
    StarPoly out(r);
    for (int j = 0; j <= r - 1; ++j) {
        std::vector<int> parts{j + 1};
        parts.insert(parts.end(), static_cast<size_t>(r - 1 - j), 1);
        out.add_term(Partition(std::move(parts)), (j % 2 ? -1 : 1) * binomial(r - 1, j));
    }
    return out;
}

std::map<Partition, i64> star_to_power(int r) {
    if (r < 1) throw std::invalid_argument("star_to_power requires r >= 1");
    std::map<Partition, i64> out;
    for (int j = 0; j <= r - 1; ++j) {
        std::vector<int> parts{j + 1};
        parts.insert(parts.end(), static_cast<size_t>(r - 1 - j), 1);
        out[Partition(std::move(parts))] = (j % 2 ? -1 : 1) * binomial(r - 1, j);
    }
    return out;
}

StarPoly power_partition_to_star(const Partition& lambda) {
    StarPoly out = StarPoly::unit();
    for (int part : lambda.parts()) out = multiply(out, power_to_star(part));
    return out;
}

StarPoly csf_oracle(const Forest& f, int max_edges) {
    int m = f.edge_count();
    if (m > max_edges) throw std::invalid_argument("csf_oracle: edge bound exceeded");
    const int n = f.vertex_count();
    StarPoly acc(n);
    const auto& edges = f.edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        // Component orders of the spanning subgraph (V, A).
        std::vector<int> parent(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) parent[static_cast<size_t>(v)] = v;
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x) {
                parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                x = parent[static_cast<size_t>(x)];
            }
            return x;
        };
        int bits = 0;
        for (int i = 0; i < m; ++i) {
            if (mask >> i & 1) {
                ++bits;
                int a = find(edges[static_cast<size_t>(i)].first);
                int b = find(edges[static_cast<size_t>(i)].second);
                if (a != b) parent[static_cast<size_t>(a)] = b;
            }
        }
        std::vector<int> size(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v) ++size[static_cast<size_t>(find(v))];
        std::vector<int> orders;
        for (int v = 0; v < n; ++v)
            if (size[static_cast<size_t>(v)] > 0) orders.push_back(size[static_cast<size_t>(v)]);
        StarPoly term = power_partition_to_star(Partition(std::move(orders)));
        if (bits % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

std::vector<DncTrace> dnc_traces(const Forest& f) {
    std::vector<DncTrace> out;
    struct Item {
        Forest forest;
        std::vector<std::pair<Edge, DncOp>> steps;
    };
    std::vector<Item> work{{f, {}}};
    while (!work.empty()) {
        Item it = std::move(work.back());
        work.pop_back();
        std::vector<Edge> internal = it.forest.internal_edges();
        if (internal.empty()) {
            out.push_back({std::move(it.steps), it.forest.component_partition()});
            continue;
        }
        Edge e = internal.front();
        for (DncOp op : {DncOp::Delete, DncOp::DotContract, DncOp::LeafContract}) {
            Item child;
            child.steps = it.steps;
            child.steps.emplace_back(e, op);
            switch (op) {
                case DncOp::Delete: child.forest = it.forest.delete_edge(e); break;
                case DncOp::DotContract: child.forest = it.forest.dot_contract(e); break;
                case DncOp::LeafContract: child.forest = it.forest.leaf_contract(e); break;
            }
            work.push_back(std::move(child));
        }
    }
    return out;
}

} // namespace chromastar
