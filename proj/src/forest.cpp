#include "chromastar/forest.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace chromastar {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

} // namespace

Forest::Forest(int n_vertices, std::vector<Edge> edges) : n_(n_vertices), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges_) {
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first == e.second) throw std::invalid_argument("loop edge");
        if (e.first < 0 || e.second >= n_) throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("parallel edge");
    UnionFind uf(n_);
    for (const auto& [u, v] : edges_) {
        if (!uf.unite(u, v)) throw std::invalid_argument("cycle in forest");
    }
    adj_.assign(static_cast<size_t>(n_), {});
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Forest::has_edge(int u, int v) const {
    Edge e = make_edge(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Forest::component_count() const { return n_ - static_cast<int>(edges_.size()); }

std::vector<std::vector<int>> Forest::components() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        std::vector<int> comp;
        std::deque<int> q{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            comp.push_back(v);
            for (int w : neighbors(v)) {
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    q.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Partition Forest::component_partition() const {
    std::vector<int> orders;
    for (const auto& c : components()) orders.push_back(static_cast<int>(c.size()));
    return Partition(std::move(orders));
}

int Forest::isolated_count() const {
    int k = 0;
    for (int v = 0; v < n_; ++v)
        if (degree(v) == 0) ++k;
    return k;
}

std::vector<Edge> Forest::internal_edges() const {
    std::vector<Edge> out;
    for (const auto& e : edges_)
        if (degree(e.first) >= 2 && degree(e.second) >= 2) out.push_back(e);
    return out;
}

std::vector<int> Forest::internal_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (degree(v) >= 2) out.push_back(v);
    return out;
}

std::vector<LeafComponent> Forest::leaf_components() const {
    std::vector<Edge> internal = internal_edges();
    std::unordered_set<long long> skip;
    for (const auto& [u, v] : internal)
        skip.insert(static_cast<long long>(u) * static_cast<long long>(n_ + 1) + v);
    auto is_internal = [&](int u, int v) {
        Edge e = make_edge(u, v);
        return skip.count(static_cast<long long>(e.first) * static_cast<long long>(n_ + 1) + e.second) > 0;
    };

    std::vector<LeafComponent> out;
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        LeafComponent lc;
        std::deque<int> q{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            lc.members.push_back(v);
            for (int w : neighbors(v)) {
                if (!seen[static_cast<size_t>(w)] && !is_internal(v, w)) {
                    seen[static_cast<size_t>(w)] = 1;
                    q.push_back(w);
                }
            }
        }
        std::sort(lc.members.begin(), lc.members.end());
        lc.order = static_cast<int>(lc.members.size());
        lc.center = lc.members[0];
        for (int v : lc.members)
            if (degree(v) > degree(lc.center)) lc.center = v;
        out.push_back(std::move(lc));
    }
    return out;
}

std::vector<int> Forest::deep_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v) {
        if (degree(v) < 2) continue;
        bool leaf_nb = false;
        for (int w : neighbors(v))
            if (degree(w) == 1) leaf_nb = true;
        if (!leaf_nb) out.push_back(v);
    }
    return out;
}

namespace {

// Returns (farthest vertex, distance) from s over the component of s.
std::pair<int, int> bfs_far(const Forest& f, int s) {
    std::vector<int> dist(static_cast<size_t>(f.vertex_count()), -1);
    std::deque<int> q{s};
    dist[static_cast<size_t>(s)] = 0;
    int best = s;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (dist[static_cast<size_t>(v)] > dist[static_cast<size_t>(best)]) best = v;
        for (int w : f.neighbors(v)) {
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                q.push_back(w);
            }
        }
    }
    return {best, dist[static_cast<size_t>(best)]};
}

} // namespace

int Forest::diameter() const {
    if (!is_connected()) throw std::invalid_argument("diameter requires a connected forest");
    auto [far, d0] = bfs_far(*this, 0);
    return bfs_far(*this, far).second;
}

int Forest::internal_degree(int v) const {
    int k = 0;
    for (int w : neighbors(v))
        if (degree(w) >= 2) ++k;
    return k;
}

Forest Forest::internal_subgraph() const {
    if (!is_connected()) throw std::invalid_argument("internal_subgraph requires a connected tree");
    std::vector<char> keep(static_cast<size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) {
        if (internal_degree(v) >= 2) {
            keep[static_cast<size_t>(v)] = 1;
            for (int w : neighbors(v))
                if (degree(w) == 1) keep[static_cast<size_t>(w)] = 1;
        }
    }
    std::vector<int> relabel(static_cast<size_t>(n_), -1);
    int m = 0;
    for (int v = 0; v < n_; ++v)
        if (keep[static_cast<size_t>(v)]) relabel[static_cast<size_t>(v)] = m++;
    std::vector<Edge> es;
    for (const auto& [u, v] : edges_)
        if (keep[static_cast<size_t>(u)] && keep[static_cast<size_t>(v)])
            es.push_back(make_edge(relabel[static_cast<size_t>(u)], relabel[static_cast<size_t>(v)]));
    return Forest(m, std::move(es));
}

void Forest::check_edge(Edge e) const {
    if (!has_edge(e.first, e.second)) throw std::invalid_argument("edge not present");
}

Forest Forest::delete_edge(Edge e) const {
    e = make_edge(e.first, e.second);
    check_edge(e);
    std::vector<Edge> es;
    es.reserve(edges_.size() - 1);
    for (const auto& x : edges_)
        if (x != e) es.push_back(x);
    return Forest(n_, std::move(es));
}

Forest Forest::contract_impl(Edge e, bool attach_leaf) const {
    e = make_edge(e.first, e.second);
    check_edge(e);
    const int kept = e.first, gone = e.second;
    // Merge `gone` into `kept`, drop `gone`, compact labels, then append the
    // fresh vertex as label n-1.
    auto relabel = [&](int v) {
        if (v == gone) return kept > gone ? kept - 1 : kept;
        return v > gone ? v - 1 : v;
    };
    std::vector<Edge> es;
    for (const auto& [u, v] : edges_) {
        if (make_edge(u, v) == e) continue;
        es.push_back(make_edge(relabel(u), relabel(v)));
    }
    if (attach_leaf) es.push_back(make_edge(relabel(kept), n_ - 1));
    return Forest(n_, std::move(es));
}

Forest Forest::leaf_contract(Edge e) const { return contract_impl(e, true); }
Forest Forest::dot_contract(Edge e) const { return contract_impl(e, false); }

namespace {

std::string ahu_rooted(const Forest& f, int root, int parent) {
    std::vector<std::string> child_codes;
    for (int w : f.neighbors(root))
        if (w != parent) child_codes.push_back(ahu_rooted(f, w, root));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    return code + ")";
}

// 1- or 2-element center of the tree component containing the given vertices,
// found by repeatedly stripping leaf layers.
std::vector<int> tree_centers(const Forest& f, const std::vector<int>& comp) {
    if (comp.size() <= 2) return comp;
    std::map<int, int> deg;
    std::map<int, char> gone;
    for (int v : comp) {
        deg[v] = f.degree(v);
        gone[v] = 0;
    }
    int remaining = static_cast<int>(comp.size());
    std::vector<int> layer;
    for (int v : comp)
        if (deg[v] <= 1) layer.push_back(v);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            gone[v] = 1;
            --remaining;
        }
        for (int v : layer)
            for (int w : f.neighbors(v))
                if (!gone[w] && --deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int v : comp)
        if (!gone[v]) centers.push_back(v);
    return centers;
}

} // namespace

std::string canonical_code(const Forest& f) {
    std::vector<std::string> comp_codes;
    for (const auto& comp : f.components()) {
        std::vector<int> centers = tree_centers(f, comp);
        std::string best;
        for (int c : centers) {
            std::string code = ahu_rooted(f, c, -1);
            if (best.empty() || code < best) best = code;
        }
        comp_codes.push_back(std::move(best));
    }
    std::sort(comp_codes.begin(), comp_codes.end());
    std::string out;
    for (const auto& c : comp_codes) {
        if (!out.empty()) out += "|";
        out += c;
    }
    return out;
}

namespace {

Forest tree_from_level_sequence(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) {
        for (int j = i - 1; j >= 0; --j) {
            if (levels[static_cast<size_t>(j)] == levels[static_cast<size_t>(i)] - 1) {
                es.push_back(make_edge(j, i));
                break;
            }
        }
    }
    return Forest(n, std::move(es));
}

} // namespace

std::vector<Forest> enumerate_free_trees(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("enumerate_free_trees supports 1 <= n <= 16");
    if (n == 1) return {Forest(1, {})};
    std::vector<Forest> out;
    std::unordered_set<std::string> seen;
    // Beyer-Hedetniemi successor generation over canonical rooted level
    // sequences, starting from the path and ending at the star.
    std::vector<int> L(static_cast<size_t>(n));
    std::iota(L.begin(), L.end(), 1);
    while (true) {
        Forest t = tree_from_level_sequence(L);
        std::string code = canonical_code(t);
        if (seen.insert(code).second) out.push_back(std::move(t));
        int p = -1;
        for (int i = n - 1; i >= 0; --i) {
            if (L[static_cast<size_t>(i)] > 2) {
                p = i;
                break;
            }
        }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i) {
            if (L[static_cast<size_t>(i)] == L[static_cast<size_t>(p)] - 1) {
                q = i;
                break;
            }
        }
        for (int i = p; i < n; ++i) L[static_cast<size_t>(i)] = L[static_cast<size_t>(i - (p - q))];
    }
    return out;
}

Forest caterpillar(const std::vector<int>& alpha) {
    int k = static_cast<int>(alpha.size());
    if (k < 1) throw std::invalid_argument("caterpillar requires a nonempty sequence");
    for (int a : alpha)
        if (a < 1) throw std::invalid_argument("caterpillar orders must be positive");
    if (k >= 2 && (alpha.front() == 1 || alpha.back() == 1))
        throw std::invalid_argument("caterpillar endpoints must have order > 1");
    std::vector<Edge> es;
    int next = k; // spine labels 0..k-1, leaves appended after
    for (int i = 0; i + 1 < k; ++i) es.push_back({i, i + 1});
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < alpha[static_cast<size_t>(i)] - 1; ++j) es.push_back(make_edge(i, next++));
    return Forest(next, std::move(es));
}

Forest disjoint_union(const Forest& a, const Forest& b) {
    std::vector<Edge> es = a.edges();
    int off = a.vertex_count();
    for (const auto& [u, v] : b.edges()) es.push_back({u + off, v + off});
    return Forest(off + b.vertex_count(), std::move(es));
}

Forest star(int n) {
    if (n < 1) throw std::invalid_argument("star requires n >= 1");
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.push_back({0, v});
    return Forest(n, std::move(es));
}

Forest path(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
    return Forest(n, std::move(es));
}

} // namespace chromastar
