#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace chromastar::oracles {

Forest prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (int v : seq) ++degree[static_cast<size_t>(v)];
    std::vector<Edge> edges;
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (int v : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (!used[static_cast<size_t>(leaf)] && degree[static_cast<size_t>(leaf)] == 1) {
                edges.push_back(make_edge(leaf, v));
                used[static_cast<size_t>(leaf)] = 1;
                --degree[static_cast<size_t>(v)];
                break;
            }
        }
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<size_t>(v)] && degree[static_cast<size_t>(v)] == 1) rest.push_back(v);
    edges.push_back(make_edge(rest[0], rest[1]));
    return Forest(n, std::move(edges));
}

std::vector<Forest> all_labeled_trees(int n) {
    if (n == 1) return {Forest(1, {})};
    if (n == 2) return {Forest(2, {{0, 1}})};
    std::vector<Forest> out;
    std::vector<int> seq(static_cast<size_t>(n - 2), 0);
    while (true) {
        out.push_back(prufer_decode(seq, n));
        int i = n - 3;
        while (i >= 0 && seq[static_cast<size_t>(i)] == n - 1) seq[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++seq[static_cast<size_t>(i)];
    }
    return out;
}

bool isomorphic_brute_force(const Forest& a, const Forest& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    int n = a.vertex_count();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const auto& [u, v] : a.edges()) {
            if (!b.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Forest random_forest(std::uint64_t seed, int max_n) {
    std::mt19937_64 rng(seed);
    int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
    if (n == 1) return Forest(1, {});
    if (n == 2) return rng() % 2 ? Forest(2, {{0, 1}}) : Forest(2, {});
    std::vector<int> seq(static_cast<size_t>(n - 2));
    for (auto& v : seq) v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    Forest tree = prufer_decode(seq, n);
    std::vector<Edge> kept;
    for (const auto& e : tree.edges())
        if (rng() % 3 != 0) kept.push_back(e); // drop each edge with prob 1/3
    return Forest(n, std::move(kept));
}

} // namespace chromastar::oracles
