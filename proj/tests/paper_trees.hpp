#pragma once

// Shared fixtures: the figure trees and displayed star-basis expansions used
// as golden data across the test suites.

#include <string>
#include <vector>

#include "chromastar/forest.hpp"
#include "chromastar/io.hpp"
#include "chromastar/starpoly.hpp"

namespace chromastar::fixtures {

// Tree whose star expansion is
// -st(4,2,1)+st(4,3)+st(5,1,1)+st(5,2)-2st(6,1)+st(7): a 4-star with a path
// of two more edges off the center. Also the two-internal-edge example with
// leaf components (4,2,1).
inline Forest two_internal_edges_tree() {
    return parse_forest("7; 0-1, 1-2, 1-3, 1-4, 4-5, 5-6");
}

inline const char* kTwoInternalEdgesCsf =
    "-1 * st[4,2,1]\n"
    "1 * st[4,3]\n"
    "1 * st[5,1,1]\n"
    "1 * st[5,2]\n"
    "-2 * st[6,1]\n"
    "1 * st[7]\n";

inline const char* kP5Csf =
    "-1 * st[2,2,1]\n"
    "1 * st[3,1,1]\n"
    "2 * st[3,2]\n"
    "-2 * st[4,1]\n"
    "1 * st[5]\n";

// Spider with three legs of length 2; one deep vertex of degree 3.
inline Forest spider222() { return parse_forest("7; 0-1, 1-2, 0-3, 3-4, 0-5, 5-6"); }

inline const char* kSpider222Csf =
    "-2 * st[2,2,2,1]\n"
    "3 * st[3,2,1,1]\n"
    "3 * st[3,2,2]\n"
    "-1 * st[4,1,1,1]\n"
    "-6 * st[4,2,1]\n"
    "3 * st[5,1,1]\n"
    "3 * st[5,2]\n"
    "-3 * st[6,1]\n"
    "1 * st[7]\n";

// Tree with deep vertices u (degree 2) and v_1 (degree 3) only.
inline Forest deep_vertex_example_tree() {
    return parse_forest("10; 0-1, 0-2, 0-3, 3-4, 4-5, 1-6, 2-7, 5-8, 9-4");
}

// 10-vertex tree with three deep vertices and leading partition (3,2,2,1,1,1).
inline Forest three_deep_tree() {
    return parse_forest("10; 0-1, 1-2, 2-3, 3-4, 4-5, 5-6, 6-7, 8-4, 9-4");
}

// Extended bi-star with leading partition (6,4,1,1,1,1).
inline Forest extended_bistar_64() { return caterpillar({6, 1, 1, 1, 1, 4}); }

// Deletion lemma figure: (a) both endpoints deep degree-2, (b) one, (c) none.
inline Forest deletion_fig_a() { return parse_forest("8; 0-1, 1-2, 1-3, 1-4, 4-5, 5-6, 6-7"); }
inline Forest deletion_fig_b() { return parse_forest("7; 0-1, 1-2, 1-3, 1-4, 4-5, 5-6"); }
inline Forest deletion_fig_c() { return parse_forest("8; 0-1, 1-2, 1-3, 1-4, 4-5, 5-6, 4-7"); }

// Contraction figures: leaf components (4,4,3); dot-contraction of the
// central internal edge gives (6,4,1), leaf-contraction gives (7,4).
inline Forest contraction_fig_tree() {
    return parse_forest("11; 0-1, 1-2, 1-3, 1-4, 4-5, 5-6, 4-7, 4-8, 4-9, 5-10");
}

// 28-vertex tree of the internal-subgraph figure; its internal subgraph is
// the caterpillar C[4,3,2].
inline Forest internal_subgraph_fig_tree() {
    return parse_forest(
        "28; 0-1, 1-2, 2-3, 3-4, 4-5, 0-6, 0-7, 0-8, 1-9, 1-10, 1-11, 1-12, 12-13, "
        "2-14, 2-15, 2-16, 16-17, 16-18, 3-19, 3-20, 20-21, 3-22, 22-23, 22-24, 22-25, 3-26, 26-27");
}

// Star hub tree builder: orders[i] gives the size of star i, links join star
// centers.
inline Forest hub_tree(const std::vector<int>& orders, const std::vector<std::pair<int, int>>& links) {
    std::vector<int> off(orders.size());
    int total = 0;
    for (size_t i = 0; i < orders.size(); ++i) {
        off[i] = total;
        total += orders[i];
    }
    std::vector<Edge> es;
    for (size_t i = 0; i < orders.size(); ++i)
        for (int t = 1; t < orders[i]; ++t) es.push_back({off[i], off[i] + t});
    for (auto [a, b] : links) es.push_back(make_edge(off[static_cast<size_t>(a)], off[static_cast<size_t>(b)]));
    return Forest(total, std::move(es));
}

// 33-vertex tree of the N(p) example: leaf components 5,4,3,2,6,3,2,4,2,2
// with the drawn adjacencies; N(6)=1, N(5)=1, N(4)=4, N(3)=4, N(2)=8.
inline Forest np_example_tree() {
    return hub_tree({5, 4, 3, 2, 6, 3, 2, 4, 2, 2},
                    {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {3, 6}, {3, 7}, {3, 8}, {3, 9}});
}

// 36-vertex proper tree with leading partition (9,7,6,5,4,3,2) and the six
// adjacencies 9-7, 9-6, 6-5, 6-4, 4-3, 4-2.
inline Forest distinct_parts_tree36() {
    return hub_tree({9, 7, 6, 5, 4, 3, 2}, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}});
}

// 17-vertex diameter-4 tree: the order-4 component is the internal subgraph,
// components 5,3,3,2 hang off its center.
inline Forest diam4_tree17() { return hub_tree({4, 5, 3, 3, 2}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}); }

inline const char* kDiam4Tree17Csf =
    "1 * st[5,4,3,3,2]\n"
    "-1 * st[5,5,3,3,1]\n"
    "-2 * st[6,5,3,2,1]\n"
    "1 * st[6,5,3,3]\n"
    "2 * st[7,5,3,1,1]\n"
    "2 * st[7,5,3,2]\n"
    "-1 * st[8,3,3,2,1]\n"
    "1 * st[8,5,2,1,1]\n"
    "-4 * st[8,5,3,1]\n"
    "1 * st[9,3,3,1,1]\n"
    "1 * st[9,3,3,2]\n"
    "-1 * st[9,5,1,1,1]\n"
    "-2 * st[9,5,2,1]\n"
    "2 * st[9,5,3]\n"
    "2 * st[10,3,2,1,1]\n"
    "-2 * st[10,3,3,1]\n"
    "3 * st[10,5,1,1]\n"
    "1 * st[10,5,2]\n"
    "-2 * st[11,3,1,1,1]\n"
    "-4 * st[11,3,2,1]\n"
    "1 * st[11,3,3]\n"
    "-3 * st[11,5,1]\n"
    "-1 * st[12,2,1,1,1]\n"
    "6 * st[12,3,1,1]\n"
    "2 * st[12,3,2]\n"
    "1 * st[12,5]\n"
    "1 * st[13,1,1,1,1]\n"
    "3 * st[13,2,1,1]\n"
    "-6 * st[13,3,1]\n"
    "-4 * st[14,1,1,1]\n"
    "-3 * st[14,2,1]\n"
    "2 * st[14,3]\n"
    "6 * st[15,1,1]\n"
    "1 * st[15,2]\n"
    "-4 * st[16,1]\n"
    "1 * st[17]\n";

// 13-vertex diameter-5 tree: deep vertices u1 (degree 4) and u2 (degree 2)
// joined by the central edge; St_4 on u2, St_3 and two St_2 on u1.
inline Forest diam5_tree13() {
    return hub_tree({1, 1, 4, 3, 2, 2}, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 5}});
}

// The T_1 component of diam5_tree13 minus its central edge.
inline Forest diam5_tree13_t1() { return hub_tree({1, 3, 2, 2}, {{0, 1}, {0, 2}, {0, 3}}); }

inline const char* kDiam5Tree13Csf =
    "3 * st[4,3,2,2,1,1]\n"
    "1 * st[4,3,2,2,2]\n"
    "-1 * st[4,3,3,1,1,1]\n"
    "-4 * st[4,3,3,2,1]\n"
    "-2 * st[4,4,2,1,1,1]\n"
    "-2 * st[4,4,2,2,1]\n"
    "3 * st[4,4,3,1,1]\n"
    "2 * st[4,4,3,2]\n"
    "-2 * st[5,3,2,1,1,1]\n"
    "-4 * st[5,3,2,2,1]\n"
    "1 * st[5,3,3,1,1]\n"
    "2 * st[5,3,3,2]\n"
    "1 * st[5,4,1,1,1,1]\n"
    "8 * st[5,4,2,1,1]\n"
    "2 * st[5,4,2,2]\n"
    "-5 * st[5,4,3,1]\n"
    "-1 * st[5,5,1,1,1]\n"
    "-4 * st[5,5,2,1]\n"
    "1 * st[5,5,3]\n"
    "-1 * st[6,2,2,1,1,1]\n"
    "1 * st[6,3,1,1,1,1]\n"
    "6 * st[6,3,2,1,1]\n"
    "1 * st[6,3,2,2]\n"
    "-4 * st[6,4,1,1,1]\n"
    "-6 * st[6,4,2,1]\n"
    "1 * st[6,4,3]\n"
    "3 * st[6,5,1,1]\n"
    "2 * st[6,5,2]\n"
    "2 * st[7,2,1,1,1,1]\n"
    "3 * st[7,2,2,1,1]\n"
    "-4 * st[7,3,1,1,1]\n"
    "-6 * st[7,3,2,1]\n"
    "6 * st[7,4,1,1]\n"
    "2 * st[7,4,2]\n"
    "-3 * st[7,5,1]\n"
    "-1 * st[8,1,1,1,1,1]\n"
    "-8 * st[8,2,1,1,1]\n"
    "-3 * st[8,2,2,1]\n"
    "6 * st[8,3,1,1]\n"
    "2 * st[8,3,2]\n"
    "-4 * st[8,4,1]\n"
    "1 * st[8,5]\n"
    "5 * st[9,1,1,1,1]\n"
    "12 * st[9,2,1,1]\n"
    "1 * st[9,2,2]\n"
    "-4 * st[9,3,1]\n"
    "1 * st[9,4]\n"
    "-10 * st[10,1,1,1]\n"
    "-8 * st[10,2,1]\n"
    "1 * st[10,3]\n"
    "10 * st[11,1,1]\n"
    "2 * st[11,2]\n"
    "-5 * st[12,1]\n"
    "1 * st[13]\n";

inline const char* kDiam5ProductCsf =
    "-2 * st[5,3,2,2,1]\n"
    "1 * st[5,3,3,1,1]\n"
    "2 * st[5,3,3,2]\n"
    "2 * st[5,4,2,1,1]\n"
    "1 * st[5,4,2,2]\n"
    "-2 * st[5,4,3,1]\n"
    "-1 * st[5,5,1,1,1]\n"
    "-4 * st[5,5,2,1]\n"
    "1 * st[5,5,3]\n"
    "3 * st[6,5,1,1]\n"
    "2 * st[6,5,2]\n"
    "-3 * st[7,5,1]\n"
    "1 * st[8,5]\n";

// Example 6-vertex star-vector rows, in the column order
// (1^6),(2,1^4),(2^2,1^2),(2^3),(3,1^3),(3,2,1),(3,3),(4,1^2),(4,2),(5,1),(6).
inline std::vector<Forest> six_vertex_trees() {
    return {
        path(6),                                     // (2,2,1,1) leading
        parse_forest("6; 0-1, 1-2, 0-3, 3-4, 0-5"),  // spider, (2,2,2)
        caterpillar({2, 1, 3}),                      // (3,2,1)
        caterpillar({3, 3}),                         // (3,3)
        caterpillar({2, 4}),                         // (4,2)
        star(6),                                     // (6)
    };
}

inline std::vector<std::vector<long long>> six_vertex_rows() {
    return {
        {0, 0, 1, 1, -1, -4, 1, 3, 2, -3, 1},
        {0, 0, 0, 1, 0, -2, 0, 1, 2, -2, 1},
        {0, 0, 0, 0, 0, -1, 1, 1, 1, -2, 1},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    };
}

inline StarPoly parse_csf(const char* text) { return parse_starpoly_text(text); }

} // namespace chromastar::fixtures
