#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

#include "chromastar/forest.hpp"
#include "chromastar/partition.hpp"
#include "chromastar/starpoly.hpp"

namespace chromastar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Star-vectors of all n-vertex trees: rows in sorted canonical-code order,
/// columns the partitions of n in increasing lex order.
struct CsfMatrix {
    int n = 0;
    std::vector<std::string> row_trees;
    std::vector<Partition> columns;
    std::vector<std::vector<i64>> entries;
};

/// Builds the n-CSF matrix; star expansions run on `jobs` threads.
CsfMatrix csf_matrix(int n, int jobs = 1);

/// Rank over the rationals via Bareiss fraction-free elimination on exact
/// integers.
int exact_rank(const CsfMatrix& m);
int exact_rank(std::vector<std::vector<BigInt>> rows);

/// One caterpillar per non-hook partition mu of n, in increasing lex order of
/// mu: C[mu_2, ..., mu_l, mu_1] (and St_n for mu = (n)). Their star-vectors
/// have pairwise distinct leading partitions, hence are independent.
std::vector<Forest> caterpillar_basis(int n);

/// f = sum over non-hook mu of coefficients[mu] * X_{C[mu_2,...,mu_l,mu_1]}.
struct BasisExpansion {
    StarPoly target;
    std::map<Partition, Rational> coefficients;
};

/// Solves the triangular-by-leading-partition system exactly. Throws
/// std::invalid_argument when f is outside the span (nonzero residual).
BasisExpansion express_in_basis(const StarPoly& f);

/// Lemma on vanishing length sums: true iff for every m > cc the
/// coefficients of length-m keys sum to zero.
bool check_length_sums(const StarPoly& f, int cc);

struct TwoEdgeRelationCheck {
    bool eq_a = false; // X_C[a,b,c] = X_C[b,c,a] - X_C[b,1,a+c-1] + X_C[b+1,a+c-1] + X_C[c,1,a+b-1] - X_C[c+1,a+b-1]
    bool eq_b = false; // X_C[b,a,c] = X_C[b,c,a] - X_C[a,1,b+c-1] + X_C[a+1,b+c-1] + X_C[c,1,a+b-1] - X_C[c+1,a+b-1]
};

/// Evaluates both three-leaf-component caterpillar relations by expansion.
/// Requires a >= b >= c and valid caterpillar endpoints for every term
/// (a, b, c >= 2).
TwoEdgeRelationCheck two_edge_relation(int a, int b, int c);

} // namespace chromastar
