#include "chromastar/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace chromastar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    }
    std::sort(parts_.rbegin(), parts_.rend());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int p) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), p));
}

bool Partition::operator<(const Partition& o) const {
    size_t n = std::max(parts_.size(), o.parts_.size());
    for (size_t i = 0; i < n; ++i) {
        int a = i < parts_.size() ? parts_[i] : 0;
        int b = i < o.parts_.size() ? o.parts_[i] : 0;
        if (a != b) return a < b;
    }
    return false;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

Ordering lex_cmp(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight())
        throw std::invalid_argument("lex_cmp requires equal weights");
    if (a < b) return Ordering::Less;
    if (b < a) return Ordering::Greater;
    return Ordering::Equal;
}

Partition sort_concat(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(v));
}

Partition sort_concat(std::span<const int> values) {
    return Partition(std::vector<int>(values.begin(), values.end()));
}

Multiset multiset_of(const Partition& p) {
    Multiset m;
    for (int x : p.parts()) ++m[x];
    return m;
}

Multiset multiset_diff(const Multiset& a, const Multiset& b) {
    Multiset out;
    for (const auto& [v, m] : a) {
        auto it = b.find(v);
        int rest = m - (it == b.end() ? 0 : it->second);
        if (rest > 0) out[v] = rest;
    }
    return out;
}

int multiset_size(const Multiset& a) {
    int s = 0;
    for (const auto& [v, m] : a) s += m;
    return s;
}

int multiset_count(const Multiset& a, int value) {
    auto it = a.find(value);
    return it == a.end() ? 0 : it->second;
}

std::string multiset_to_string(const Multiset& a) {
    std::string s = "{{";
    bool first = true;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        for (int i = 0; i < it->second; ++i) {
            if (!first) s += ",";
            s += std::to_string(it->first);
            first = false;
        }
    }
    return s + "}}";
}

std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw std::invalid_argument("partitions_of requires n >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Parts generated in weakly decreasing order along cur.
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t partition_count(int n) {
    if (n < 0) return 0;
    std::vector<std::int64_t> p(static_cast<size_t>(n) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m) p[static_cast<size_t>(m)] += p[static_cast<size_t>(m - k)];
    return p[static_cast<size_t>(n)];
}

bool is_hook(const Partition& p) {
    if (p.length() <= 1) return false;
    for (int i = 1; i < p.length(); ++i)
        if (p.part(i) != 1) return false;
    return true;
}

} // namespace chromastar
