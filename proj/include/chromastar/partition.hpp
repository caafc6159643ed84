#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace chromastar {

/// Integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition (weight 0) is a valid value; it only shows up as an
/// intermediate of multiset arithmetic, never as a StarPoly key.
class Partition {
public:
    Partition() = default;
    /// Normalizes: sorts descending. Throws std::invalid_argument on
    /// non-positive entries.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    int multiplicity(int p) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    /// Total order: lexicographic with missing parts compared as 0. On equal
    /// weights this is the usual lex order on partitions; it stays a strict
    /// weak order across weights, which is what map keys need.
    bool operator<(const Partition& o) const;

    std::string to_string() const; // "[4,2,1]", "[]" for empty

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

enum class Ordering { Less, Equal, Greater };

/// Lex comparison of two partitions of equal weight. Throws on weight
/// mismatch.
Ordering lex_cmp(const Partition& a, const Partition& b);

/// Multiset union of parts, sorted decreasingly.
Partition sort_concat(const Partition& a, const Partition& b);
Partition sort_concat(std::span<const int> values);

/// Multiset of integers: value -> multiplicity >= 1.
using Multiset = std::map<int, int>;

Multiset multiset_of(const Partition& p);
/// Per-element max(0, m_A - m_B).
Multiset multiset_diff(const Multiset& a, const Multiset& b);
int multiset_size(const Multiset& a);
int multiset_count(const Multiset& a, int value);
std::string multiset_to_string(const Multiset& a); // "{{9,7}}"

/// All partitions of n in increasing lex order; length = p(n).
std::vector<Partition> partitions_of(int n);

/// Number of partitions of n (recurrence; independent of the generator).
std::int64_t partition_count(int n);

/// True iff length > 1 and every part after the first equals 1.
/// (1^n) is a hook; there are exactly n-1 hooks of weight n.
bool is_hook(const Partition& p);

} // namespace chromastar
