// Independent brute-force oracles used to freeze expected values. These
// deliberately avoid the production lattice/chief machinery: sets of sorted
// member vectors, naive fixpoint loops, raw carrier arithmetic.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "capfusion/group.hpp"

namespace oracle {

using capf::FiniteGroup;

inline std::vector<int> close_set(const FiniteGroup& g, std::vector<int> gens) {
    std::set<int> elems{FiniteGroup::kIdentity};
    for (int x : gens) elems.insert(x);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(elems.begin(), elems.end());
        for (int a : cur)
            for (int b : cur)
                if (elems.insert(g.mul(a, b)).second) grew = true;
    }
    return {elems.begin(), elems.end()};
}

// Every subgroup, by growing each found subgroup by one extra generator
// until the collection stabilizes.
inline std::set<std::vector<int>> all_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> found;
    found.insert(close_set(g, {}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<std::vector<int>> snapshot = found;
        for (const auto& sub : snapshot) {
            for (int x = 0; x < g.order(); ++x) {
                if (std::binary_search(sub.begin(), sub.end(), x)) continue;
                std::vector<int> gens = sub;
                gens.push_back(x);
                if (found.insert(close_set(g, gens)).second) grew = true;
            }
        }
    }
    return found;
}

inline bool is_normal(const FiniteGroup& g, const std::vector<int>& sub) {
    for (int x = 0; x < g.order(); ++x)
        for (int m : sub)
            if (!std::binary_search(sub.begin(), sub.end(), g.conj(m, x))) return false;
    return true;
}

inline std::set<std::vector<int>> normal_subgroups(const FiniteGroup& g) {
    std::set<std::vector<int>> out;
    for (const auto& sub : all_subgroups(g))
        if (is_normal(g, sub)) out.insert(sub);
    return out;
}

// Chief factors as minimal pairs of normal subgroups.
inline std::set<std::pair<std::vector<int>, std::vector<int>>> chief_pairs(const FiniteGroup& g) {
    auto normals = normal_subgroups(g);
    std::set<std::pair<std::vector<int>, std::vector<int>>> out;
    auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    for (const auto& k : normals) {
        for (const auto& h : normals) {
            if (k == h || !contains(h, k)) continue;
            bool between = false;
            for (const auto& l : normals) {
                if (l == k || l == h) continue;
                if (contains(l, k) && contains(h, l)) {
                    between = true;
                    break;
                }
            }
            if (!between) out.insert({k, h});
        }
    }
    return out;
}

}  // namespace oracle
