#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chromastar/analysis.hpp"
#include "chromastar/forest.hpp"
#include "chromastar/starpoly.hpp"

namespace chromastar {

struct ReconstructionResult {
    std::optional<Forest> tree; // present iff a branch produced a verified tree
    bool verified = false;      // star_expand(tree) == input, bit-exact
    std::string reason;         // on failure: attempted branches and why each declined
};

/// Rebuild a tree from its star-basis CSF. Dispatch order: star, bi-star,
/// extended bi-star, proper-with-distinct-leading-parts, diameter 4,
/// diameter 5. Every candidate is confirmed by recomputing its CSF before
/// being returned. Inputs outside the covered classes come back unsupported
/// with the per-branch reasons.
ReconstructionResult reconstruct(const StarPoly& f);

/// Individual branches; each returns a CSF-verified tree or nullopt.
std::optional<Forest> reconstruct_star(const StarPoly& f);
std::optional<Forest> reconstruct_bistar(const StarPoly& f);          // bi-star and extended bi-star
std::optional<Forest> reconstruct_distinct_parts(const StarPoly& f);  // 1-edge-adjacency rebuild
std::optional<Forest> reconstruct_diam4(const StarPoly& f);
std::optional<Forest> reconstruct_diam5(const StarPoly& f);

/// Every verified tree any branch can produce, deduplicated by canonical
/// code. The paper's uniqueness theorems make more than one class impossible;
/// tests assert that.
std::vector<Forest> reconstruct_all_verified(const StarPoly& f);

struct ProductInfo {
    StarPoly product; // X_{T_1} X_{T_2} where T_1 u T_2 = T \ e, e the central edge
    int n1 = 0;       // #V(T_1) >= #V(T_2), read off the unique length-2 key
    int n2 = 0;
};

/// For a diameter-5 CSF whose internal subgraph has leaf components of orders
/// p and q: rebuilds the two diameter-4 trees of the DNC relation on the
/// central edge and returns X_{T_1}X_{T_2} = X_T + X_{(T.e)\l_e} - X_{T.e}.
ProductInfo solve_product(const StarPoly& f, int p, int q);

/// Factors g = X_{T_1}X_{T_2} given the orders n1 >= n2 of the factors.
/// Throws on a malformed product.
std::pair<StarPoly, StarPoly> split_product(const StarPoly& g, int n1, int n2);

} // namespace chromastar
