#pragma once

#include "chromastar/forest.hpp"
#include "chromastar/partition.hpp"
#include "chromastar/starpoly.hpp"

namespace chromastar {

struct LeadingTerm {
    Partition partition; // lex-minimal key with nonzero coefficient
    i64 coeff = 0;
};

/// Lex-minimal key of f with its coefficient. Throws on the zero polynomial.
LeadingTerm leading_term(const StarPoly& f);

/// Sorted orders of the leaf components, lambda(F \ I(F)). Equals the leading
/// partition of star_expand(F).
Partition lambda_lc(const Forest& f);

/// (-1)^m prod (deg(u_i) - 1) over the m deep vertices.
i64 predicted_leading_coeff(const Forest& f);

/// Multiplicity of 1 in a leading partition = number of deep vertices (for
/// forests without isolated vertices).
int deep_count_from_lead(const Partition& lead);

/// (-1)^m C(#I(T), m): the coefficient of st_(n-m,1^m) for a tree.
/// Requires a tree and 0 <= m <= n-2.
i64 predicted_hook_coeff(const Forest& tree, int m);

struct AdjacencyRecord {
    Partition mu;
    i64 coeff = 0;
    Multiset e_mu; // A_lead - A_mu
};

/// All records for keys mu with nonzero coefficient and
/// length(mu) = length(lead) - k; with exclude_ones set (the default, as every
/// reconstruction use-site wants) keys containing a part 1 are skipped.
std::vector<AdjacencyRecord> adjacency_records(const StarPoly& f, int k, bool exclude_ones = true);

/// N(p) = sum m_{E_lambda}(p) * c_lambda over the no-ones keys of length
/// length(lead) - 1. Requires p to be a part of the leading partition.
i64 n_p(const StarPoly& f, int p);

} // namespace chromastar
