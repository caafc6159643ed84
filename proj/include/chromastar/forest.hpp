#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chromastar/partition.hpp"

namespace chromastar {

/// Undirected edge, stored normalized with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct LeafComponent {
    int center = 0;            // member with the highest degree in the parent
                               // forest, ties broken by smaller label
    std::vector<int> members;  // sorted
    int order = 0;
};

/// Simple acyclic graph over vertices 0..n-1. Immutable after construction;
/// the edge operations return fresh values.
class Forest {
public:
    Forest() = default;
    /// Validates: labels in range, no loops, no parallel edges, acyclic.
    Forest(int n_vertices, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool has_edge(int u, int v) const;

    int component_count() const;
    std::vector<std::vector<int>> components() const; // sorted vertex lists
    bool is_connected() const { return n_ >= 1 && component_count() == 1; }
    /// Orders of the connected components as a partition (lambda(F)).
    Partition component_partition() const;
    int isolated_count() const;

    /// Edges whose two endpoints both have degree >= 2.
    std::vector<Edge> internal_edges() const;
    std::vector<int> internal_vertices() const;
    /// Connected components after removing all internal edges; each is a star.
    std::vector<LeafComponent> leaf_components() const;
    /// Internal vertices all of whose neighbors have degree >= 2.
    std::vector<int> deep_vertices() const;
    /// Edge-length of a longest path. Requires a connected forest.
    int diameter() const;
    /// Number of internal vertices among the neighbors of v.
    int internal_degree(int v) const;
    /// Subgraph induced by the vertices of internal degree >= 2 together with
    /// their adjacent leaves, relabeled densely. Requires a connected forest;
    /// empty for diameter <= 3.
    Forest internal_subgraph() const;

    /// The three DNC edge operations. All preserve the vertex count; the
    /// contractions merge e into its smaller endpoint and append the fresh
    /// leaf / isolated vertex as the last label after compaction.
    Forest delete_edge(Edge e) const;
    Forest leaf_contract(Edge e) const;
    Forest dot_contract(Edge e) const;

    bool operator==(const Forest& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    void check_edge(Edge e) const;
    Forest contract_impl(Edge e, bool attach_leaf) const;

    int n_ = 0;
    std::vector<Edge> edges_;            // sorted, normalized
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

/// Isomorphism-invariant complete code: AHU encoding rooted at the 1- or
/// 2-vertex center of each tree component, component codes sorted.
/// Equal codes <=> isomorphic forests.
std::string canonical_code(const Forest& f);

/// One representative per isomorphism class of n-vertex trees, deterministic
/// order. Rooted level-sequence successor generation deduplicated by
/// canonical code. 1 <= n <= 16.
std::vector<Forest> enumerate_free_trees(int n);

/// Caterpillar with leaf-component sequence alpha: spine v_1..v_k with
/// alpha_i - 1 leaves on v_i. Requires alpha_1 > 1 and alpha_k > 1 when
/// k >= 2.
Forest caterpillar(const std::vector<int>& alpha);

Forest disjoint_union(const Forest& a, const Forest& b);

Forest star(int n); // St_n
Forest path(int n); // P_n

} // namespace chromastar
