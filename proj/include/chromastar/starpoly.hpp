#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chromastar/forest.hpp"
#include "chromastar/partition.hpp"

namespace chromastar {

using i64 = std::int64_t;

i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 binomial(int n, int k);

/// Symmetric function of homogeneous degree n written in the star-basis:
/// a finite association Partition(weight n) -> nonzero integer coefficient,
/// kept in increasing lex order.
class StarPoly {
public:
    explicit StarPoly(int degree);
    static StarPoly unit(); // degree 0, constant 1
    static StarPoly single(const Partition& key, i64 coeff = 1);

    int degree() const { return degree_; }
    const std::map<Partition, i64>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    /// Stored coefficient or 0. Throws on weight mismatch.
    i64 coefficient(const Partition& key) const;
    /// Adds c to the coefficient of key, dropping it if the sum is zero.
    void add_term(const Partition& key, i64 c);

    StarPoly& operator+=(const StarPoly& o);
    StarPoly& operator-=(const StarPoly& o);
    bool operator==(const StarPoly& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }

private:
    int degree_ = 0;
    std::map<Partition, i64> terms_;
};

/// Bilinear extension of st_lambda * st_mu = st_sort(lambda.mu).
StarPoly multiply(const StarPoly& f, const StarPoly& g);
inline StarPoly operator*(const StarPoly& f, const StarPoly& g) { return multiply(f, g); }

/// Exact quotient q with divisor * q == product; throws if no such q exists.
StarPoly divide_exact(const StarPoly& product, const StarPoly& divisor);

struct ExpandOptions {
    bool memoize = true;       // cache intermediate forests by canonical code
    bool shuffle_edges = false; // pick internal edges with a seeded rng
    std::uint64_t seed = 0;    // instead of the lowest canonical edge
};

/// X_F in the star-basis via the deletion-near-contraction recursion
/// X_F = X_{F\e} - X_{(F.e)\l_e} + X_{F.e} over internal edges.
StarPoly star_expand(const Forest& f, const ExpandOptions& opt = {});

/// The independent route: X_F = sum_{A subset E} (-1)^{|A|} p_{lambda(A)},
/// each power-sum converted to the star-basis multiplicatively.
/// Throws when the edge count exceeds max_edges.
StarPoly csf_oracle(const Forest& f, int max_edges = 22);

/// Expansion of p_r in the star-basis.
StarPoly power_to_star(int r);
/// Expansion of st_r in the power basis.
std::map<Partition, i64> star_to_power(int r);
/// p_lambda in the star-basis (product over the parts).
StarPoly power_partition_to_star(const Partition& lambda);

enum class DncOp { Delete, DotContract, LeafContract }; // L, M, R

/// One root-to-leaf path of the DNC-tree: the operations applied in order,
/// each on an internal edge of the forest current at that step.
struct DncTrace {
    std::vector<std::pair<Edge, DncOp>> steps;
    Partition leaf_partition;
};

/// Every root-to-leaf path of the DNC-tree with the fixed lowest-edge rule.
/// Exponential in the internal edge count; meant for small inputs.
std::vector<DncTrace> dnc_traces(const Forest& f);

} // namespace chromastar
