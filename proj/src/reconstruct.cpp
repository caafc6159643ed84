#include "chromastar/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace chromastar {

namespace {

// Collection of stars with edges between their centers.
struct StarAssembly {
    std::vector<int> orders;
    std::vector<std::pair<int, int>> links; // indices into orders

    int add_star(int order) {
        orders.push_back(order);
        return static_cast<int>(orders.size()) - 1;
    }
    void link(int a, int b) { links.emplace_back(a, b); }

    // Throws std::invalid_argument if the linked centers form a cycle.
    Forest build() const {
        std::vector<int> off(orders.size());
        int total = 0;
        for (size_t i = 0; i < orders.size(); ++i) {
            off[i] = total;
            total += orders[i];
        }
        std::vector<Edge> es;
        for (size_t i = 0; i < orders.size(); ++i)
            for (int t = 1; t < orders[i]; ++t) es.push_back({off[i], off[i] + t});
        for (const auto& [a, b] : links)
            es.push_back(make_edge(off[static_cast<size_t>(a)], off[static_cast<size_t>(b)]));
        return Forest(total, std::move(es));
    }
};

bool verify_against(const Forest& t, const StarPoly& f) {
    if (t.vertex_count() != f.degree()) return false;
    return star_expand(t) == f;
}

std::vector<int> multiset_values(const Multiset& ms) {
    std::vector<int> out;
    for (const auto& [v, m] : ms)
        for (int i = 0; i < m; ++i) out.push_back(v);
    return out;
}

bool ms_remove(Multiset& ms, int value, int count = 1) {
    auto it = ms.find(value);
    if (it == ms.end() || it->second < count) return false;
    it->second -= count;
    if (it->second == 0) ms.erase(it);
    return true;
}

bool ms_contains(const Multiset& big, const Multiset& small) {
    for (const auto& [v, m] : small)
        if (multiset_count(big, v) < m) return false;
    return true;
}

// Tree with every leaf component attached to the center of the inner one;
// comps lists all leaf component orders including one copy of inner_order.
std::optional<Forest> attach_all(const Multiset& comps, int inner_order) {
    Multiset rest = comps;
    if (!ms_remove(rest, inner_order)) return std::nullopt;
    StarAssembly a;
    int hub = a.add_star(inner_order);
    for (int r : multiset_values(rest)) a.link(hub, a.add_star(r));
    return a.build();
}

// Bi-star skeleton p--q with extra leaf components attached per side.
Forest two_hub_tree(int p, int q, const Multiset& on_p, const Multiset& on_q) {
    StarAssembly a;
    int hp = a.add_star(p);
    int hq = a.add_star(q);
    a.link(hp, hq);
    for (int r : multiset_values(on_p)) a.link(hp, a.add_star(r));
    for (int r : multiset_values(on_q)) a.link(hq, a.add_star(r));
    return a.build();
}

// Coefficient of sort(a+b, lead - {a,b}); the key every 1-edge adjacency
// argument in the reconstruction reads.
i64 merged_pair_coeff(const StarPoly& f, const Partition& lead, int a, int b) {
    Multiset ms = multiset_of(lead);
    if (!ms_remove(ms, a) || !ms_remove(ms, b)) return 0;
    ++ms[a + b];
    return f.coefficient(Partition(multiset_values(ms)));
}

std::optional<Forest> first_verified(std::vector<Forest> candidates, const StarPoly& f) {
    std::vector<Forest> verified;
    std::set<std::string> codes;
    for (auto& t : candidates) {
        if (verify_against(t, f) && codes.insert(canonical_code(t)).second)
            verified.push_back(std::move(t));
    }
    if (verified.empty()) return std::nullopt;
    if (verified.size() > 1)
        throw std::logic_error("reconstruction: non-isomorphic verified candidates");
    return verified.front();
}

} // namespace

std::optional<Forest> reconstruct_star(const StarPoly& f) {
    if (f.is_zero()) return std::nullopt;
    Partition lead = leading_term(f).partition;
    if (lead.length() != 1) return std::nullopt;
    Forest t = star(lead.part(0));
    if (verify_against(t, f)) return t;
    return std::nullopt;
}

std::optional<Forest> reconstruct_bistar(const StarPoly& f) {
    if (f.is_zero()) return std::nullopt;
    Partition lead = leading_term(f).partition;
    // (i,j,1^k) with i,j > 1: stars St_i, St_j joined by k >= 0 deep vertices
    // of degree 2.
    if (lead.length() < 2) return std::nullopt;
    int i = lead.part(0), j = lead.part(1);
    if (i < 2 || j < 2) return std::nullopt;
    int k = lead.length() - 2;
    for (int t = 2; t < lead.length(); ++t)
        if (lead.part(t) != 1) return std::nullopt;
    StarAssembly a;
    int prev = a.add_star(i);
    for (int t = 0; t < k; ++t) {
        int mid = a.add_star(1);
        a.link(prev, mid);
        prev = mid;
    }
    int last = a.add_star(j);
    a.link(prev, last);
    Forest tree = a.build();
    if (verify_against(tree, f)) return tree;
    return std::nullopt;
}

std::optional<Forest> reconstruct_distinct_parts(const StarPoly& f) {
    if (f.is_zero()) return std::nullopt;
    Partition lead = leading_term(f).partition;
    if (lead.length() < 3) return std::nullopt;
    if (lead.multiplicity(1) > 0) return std::nullopt;
    for (int t = 0; t + 1 < lead.length(); ++t)
        if (lead.part(t) == lead.part(t + 1)) return std::nullopt;

    auto records = adjacency_records(f, 1, /*exclude_ones=*/true);
    // A tree on l leaf components has exactly l-1 internal edges, each
    // occurring once since the orders are all distinct.
    if (static_cast<int>(records.size()) != lead.length() - 1) return std::nullopt;
    StarAssembly a;
    std::map<int, int> hub_of_order;
    for (int t = 0; t < lead.length(); ++t) hub_of_order[lead.part(t)] = a.add_star(lead.part(t));
    for (const auto& rec : records) {
        if (rec.coeff != 1 || multiset_size(rec.e_mu) != 2) return std::nullopt;
        std::vector<int> pq = multiset_values(rec.e_mu);
        auto ip = hub_of_order.find(pq[0]);
        auto iq = hub_of_order.find(pq[1]);
        if (ip == hub_of_order.end() || iq == hub_of_order.end() || pq[0] == pq[1])
            return std::nullopt;
        a.link(ip->second, iq->second);
    }
    try {
        Forest t = a.build();
        if (t.is_connected() && verify_against(t, f)) return t;
    } catch (const std::invalid_argument&) {
        // cycle between centers: not in this class
    }
    return std::nullopt;
}

std::optional<Forest> reconstruct_diam4(const StarPoly& f) {
    if (f.is_zero()) return std::nullopt;
    Partition lead = leading_term(f).partition;
    Multiset comps = multiset_of(lead);
    int m1 = lead.multiplicity(1);
    std::vector<Forest> candidates;
    if (m1 == 1 && lead.length() >= 3) {
        // The deep vertex is the internal subgraph; hang everything on it.
        if (auto t = attach_all(comps, 1)) candidates.push_back(std::move(*t));
    } else if (m1 == 0 && lead.length() >= 3) {
        // The inner component order is the part p with N(p) > m_p.
        std::set<int> parts(lead.parts().begin(), lead.parts().end());
        for (int p : parts) {
            if (n_p(f, p) > lead.multiplicity(p)) {
                if (auto t = attach_all(comps, p)) candidates.push_back(std::move(*t));
            }
        }
    } else {
        return std::nullopt;
    }
    return first_verified(std::move(candidates), f);
}

ProductInfo solve_product(const StarPoly& f, int p, int q) {
    Partition lead = leading_term(f).partition;
    Multiset comps = multiset_of(lead);
    if (!ms_remove(comps, p) || !ms_remove(comps, q))
        throw std::invalid_argument("solve_product: p, q not contained in the leading partition");

    Multiset h_comps = comps;
    ++h_comps[p + q - 1];
    Multiset odot_comps = comps;
    ++odot_comps[p + q];

    auto h = attach_all(h_comps, p + q - 1);
    auto odot = attach_all(odot_comps, p + q);
    if (!h || !odot) throw std::invalid_argument("solve_product: inconsistent component data");

    // X_{T1 u T2} = X_T + X_{(T.e)\l_e} - X_{T.e}, with (T.e)\l_e = H u St_1.
    StarPoly g = f;
    g += multiply(star_expand(*h), StarPoly::single(Partition({1})));
    g -= star_expand(*odot);

    std::vector<std::pair<Partition, i64>> len2;
    for (const auto& [key, c] : g.terms())
        if (key.length() == 2) len2.emplace_back(key, c);
    if (len2.size() != 1 || len2[0].second != 1)
        throw std::invalid_argument("solve_product: no unique length-2 key");
    return {std::move(g), len2[0].first.part(0), len2[0].first.part(1)};
}

namespace {

// Candidate trees for a factor of a product, rebuilt from its leading
// partition alone (the factor has diameter <= 4).
std::vector<Forest> factor_candidates_from_lead(const Partition& alpha) {
    std::vector<Forest> out;
    Multiset comps = multiset_of(alpha);
    if (alpha.length() == 1) {
        out.push_back(star(alpha.part(0)));
        return out;
    }
    if (alpha.length() == 2 && alpha.part(1) >= 2) {
        StarAssembly a;
        a.link(a.add_star(alpha.part(0)), a.add_star(alpha.part(1)));
        out.push_back(a.build());
        return out;
    }
    int m1 = alpha.multiplicity(1);
    if (m1 == 1) {
        if (auto t = attach_all(comps, 1)) out.push_back(std::move(*t));
    } else if (m1 == 0) {
        std::set<int> parts(alpha.parts().begin(), alpha.parts().end());
        for (int r : parts)
            if (auto t = attach_all(comps, r)) out.push_back(std::move(*t));
    }
    return out;
}

} // namespace

std::pair<StarPoly, StarPoly> split_product(const StarPoly& g, int n1, int n2) {
    if (n1 < n2 || n2 < 1 || n1 + n2 != g.degree())
        throw std::invalid_argument("split_product: bad factor orders");
    if (n1 > n2) {
        // No key of X_{T_2} reaches n1, so the keys of g with largest part n1
        // are exactly st_(n1) * X_{T_2}.
        StarPoly x2(n2);
        for (const auto& [key, c] : g.terms()) {
            if (key.part(0) != n1) continue;
            std::vector<int> rest(key.parts().begin() + 1, key.parts().end());
            x2.add_term(Partition(std::move(rest)), c);
        }
        if (x2.is_zero()) throw std::invalid_argument("split_product: malformed product");
        return {divide_exact(g, x2), x2};
    }
    // n1 == n2: the smallest alpha with c_{(n1,alpha)} != 0 is the leading
    // partition of one factor; rebuild that factor by its diameter class and
    // divide.
    std::optional<Partition> alpha;
    for (const auto& [key, c] : g.terms()) {
        if (key.part(0) != n1) continue;
        std::vector<int> rest(key.parts().begin() + 1, key.parts().end());
        Partition a(std::move(rest));
        if (!alpha || a < *alpha) alpha = std::move(a);
    }
    if (!alpha) throw std::invalid_argument("split_product: malformed product");
    for (const Forest& t1 : factor_candidates_from_lead(*alpha)) {
        StarPoly x1 = star_expand(t1);
        try {
            StarPoly x2 = divide_exact(g, x1);
            return {x1, x2};
        } catch (const std::invalid_argument&) {
            // not the factor; try the next candidate
        }
    }
    throw std::invalid_argument("split_product: malformed product");
}

namespace {

// Diameter <= 4 dispatch used on product factors.
std::optional<Forest> reconstruct_factor(const StarPoly& x) {
    if (auto t = reconstruct_star(x)) return t;
    if (auto t = reconstruct_bistar(x)) return t;
    if (auto t = reconstruct_distinct_parts(x)) return t;
    if (auto t = reconstruct_diam4(x)) return t;
    return std::nullopt;
}

// Orders of the leaf components hanging off the internal-subgraph component
// of order p on this side, read from the factor tree (Deletion Lemma cases).
std::optional<Multiset> side_components(const Forest& factor, int p) {
    Multiset lc = multiset_of(lambda_lc(factor));
    if (p >= 2) {
        if (!ms_remove(lc, p)) return std::nullopt;
        return lc;
    }
    // p == 1: the former deep vertex became a leaf when the central edge was
    // deleted (factor is a star), or it stayed deep (degree >= 3).
    if (factor.diameter() <= 2) {
        Multiset out;
        if (factor.vertex_count() < 2) return std::nullopt;
        out[factor.vertex_count() - 1] = 1;
        return out;
    }
    if (!ms_remove(lc, 1)) return std::nullopt;
    return lc;
}

void balanced_candidates(const StarPoly& f, int p, std::vector<Forest>& out) {
    ProductInfo info = solve_product(f, p, p);
    auto [x1, x2] = split_product(info.product, info.n1, info.n2);

    Partition lead = leading_term(f).partition;
    Multiset peripheral = multiset_of(lead);
    if (!ms_remove(peripheral, p, 2)) return;

    for (const StarPoly* factor_poly : {&x1, &x2}) {
        auto factor = reconstruct_factor(*factor_poly);
        if (!factor) continue;
        auto side = side_components(*factor, p);
        if (!side || !ms_contains(peripheral, *side)) continue;
        Multiset other = multiset_diff(peripheral, *side);
        out.push_back(two_hub_tree(p, p, *side, other));
    }
}

} // namespace

std::optional<Forest> reconstruct_diam5(const StarPoly& f) {
    if (f.is_zero()) return std::nullopt;
    Partition lead = leading_term(f).partition;
    int m1 = lead.multiplicity(1);
    if (m1 > 2 || lead.length() - m1 < 2) return std::nullopt;
    Multiset comps = multiset_of(lead);
    std::set<int> distinct_parts(lead.parts().begin(), lead.parts().end());

    std::vector<Forest> candidates;
    try {
        if (m1 == 2) {
            balanced_candidates(f, 1, candidates);
        } else if (m1 == 1) {
            // The singleton component is in the internal subgraph; test every
            // order adjacent to it as the other internal component.
            std::map<int, i64> next_to_deep; // order -> count of components on the deep vertex
            for (int r : distinct_parts)
                if (r != 1) next_to_deep[r] = merged_pair_coeff(f, lead, r, 1);
            for (const auto& [q, lq] : next_to_deep) {
                if (lq < 1) continue;
                Multiset on_deep, on_q;
                bool ok = true;
                for (const auto& [r, lr] : next_to_deep) {
                    i64 here = (r == q) ? lr - 1 : lr; // the inner q-component itself borders the deep vertex
                    i64 total = comps.at(r) - (r == q ? 1 : 0);
                    if (here < 0 || here > total) {
                        ok = false;
                        break;
                    }
                    if (here > 0) on_deep[r] = static_cast<int>(here);
                    if (total - here > 0) on_q[r] = static_cast<int>(total - here);
                }
                if (ok) candidates.push_back(two_hub_tree(1, q, on_deep, on_q));
            }
        } else {
            std::vector<int> inner;
            for (int r : distinct_parts)
                if (n_p(f, r) > lead.multiplicity(r)) inner.push_back(r);
            if (inner.size() == 1) {
                balanced_candidates(f, inner[0], candidates);
            } else if (inner.size() == 2) {
                int p = inner[1], q = inner[0]; // any fixed assignment; the build is symmetric
                Multiset on_p, on_q;
                bool ok = true;
                for (int r : distinct_parts) {
                    // mr peripheral components of order r; `here` of them sit
                    // on the inner p-component, the rest on the inner q one.
                    i64 mr = comps.at(r);
                    i64 here;
                    if (r == p) {
                        mr -= 1;
                        here = merged_pair_coeff(f, lead, p, p);
                    } else if (r == q) {
                        mr -= 1;
                        here = mr - merged_pair_coeff(f, lead, q, q);
                    } else {
                        here = merged_pair_coeff(f, lead, p, r);
                    }
                    if (here < 0 || here > mr) {
                        ok = false;
                        break;
                    }
                    if (here > 0) on_p[r] = static_cast<int>(here);
                    if (mr - here > 0) on_q[r] = static_cast<int>(mr - here);
                }
                if (ok) candidates.push_back(two_hub_tree(p, q, on_p, on_q));
            }
        }
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return first_verified(std::move(candidates), f);
}

namespace {

using Branch = std::optional<Forest> (*)(const StarPoly&);

constexpr std::pair<const char*, Branch> kBranches[] = {
    {"star", reconstruct_star},
    {"bi-star", reconstruct_bistar},
    {"distinct-parts", reconstruct_distinct_parts},
    {"diam4", reconstruct_diam4},
    {"diam5", reconstruct_diam5},
};

} // namespace

ReconstructionResult reconstruct(const StarPoly& f) {
    ReconstructionResult res;
    if (f.is_zero()) {
        res.reason = "zero polynomial";
        return res;
    }
    std::string log;
    for (const auto& [name, branch] : kBranches) {
        if (auto t = branch(f)) {
            res.tree = std::move(*t);
            res.verified = true;
            return res;
        }
        if (!log.empty()) log += "; ";
        log += name;
        log += ": no verified candidate";
    }
    res.reason = "unsupported input (diameter >= 6 without distinct leading parts, or not a tree CSF); attempted " + log;
    return res;
}

std::vector<Forest> reconstruct_all_verified(const StarPoly& f) {
    std::vector<Forest> out;
    std::set<std::string> codes;
    for (const auto& [name, branch] : kBranches) {
        if (auto t = branch(f)) {
            if (codes.insert(canonical_code(*t)).second) out.push_back(std::move(*t));
        }
    }
    return out;
}

} // namespace chromastar
