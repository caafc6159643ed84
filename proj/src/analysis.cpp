#include "chromastar/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace chromastar {

LeadingTerm leading_term(const StarPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("leading_term of zero polynomial");
    const auto& [key, coeff] = *f.terms().begin();
    return {key, coeff};
}

Partition lambda_lc(const Forest& f) {
    std::vector<int> orders;
    for (const auto& lc : f.leaf_components()) orders.push_back(lc.order);
    return Partition(std::move(orders));
}

i64 predicted_leading_coeff(const Forest& f) {
    i64 c = 1;
    for (int v : f.deep_vertices()) c = checked_mul(c, -(f.degree(v) - 1));
    return c;
}

int deep_count_from_lead(const Partition& lead) { return lead.multiplicity(1); }

i64 predicted_hook_coeff(const Forest& tree, int m) {
    if (!tree.is_connected()) throw std::invalid_argument("predicted_hook_coeff requires a tree");
    int n = tree.vertex_count();
    if (m < 0 || m > n - 2) throw std::invalid_argument("hook exponent out of range");
    i64 b = binomial(static_cast<int>(tree.internal_edges().size()), m);
    return m % 2 ? -b : b;
}

std::vector<AdjacencyRecord> adjacency_records(const StarPoly& f, int k, bool exclude_ones) {
    LeadingTerm lead = leading_term(f);
    Multiset lead_ms = multiset_of(lead.partition);
    int want_len = lead.partition.length() - k;
    std::vector<AdjacencyRecord> out;
    for (const auto& [mu, c] : f.terms()) {
        if (mu.length() != want_len) continue;
        if (exclude_ones && mu.multiplicity(1) > 0) continue;
        out.push_back({mu, c, multiset_diff(lead_ms, multiset_of(mu))});
    }
    return out;
}

i64 n_p(const StarPoly& f, int p) {
    LeadingTerm lead = leading_term(f);
    if (lead.partition.multiplicity(p) == 0)
        throw std::invalid_argument("n_p: p is not a part of the leading partition");
    i64 total = 0;
    for (const auto& rec : adjacency_records(f, 1, /*exclude_ones=*/true))
        total = checked_add(total, checked_mul(multiset_count(rec.e_mu, p), rec.coeff));
    return total;
}

} // namespace chromastar
