#include "capfusion/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "capfusion/errors.hpp"

namespace capf {

namespace {

int p_part(int n, int p) {
    int r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

bool is_p_power(int n, int p) { return p_part(n, p) == n; }

}  // namespace

int SubgroupLattice::index_of(const std::vector<int>& members) const {
    auto it = by_members_.find(members);
    return it == by_members_.end() ? -1 : it->second;
}

std::vector<int> SubgroupLattice::overgroups_of(int idx) const {
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(all.size()); ++j)
        if (contains(j, idx)) out.push_back(j);
    return out;
}

std::vector<int> SubgroupLattice::subgroups_within(int idx) const {
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(all.size()); ++j)
        if (contains(idx, j)) out.push_back(j);
    return out;
}

std::vector<int> SubgroupLattice::of_order(int n) const {
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(all.size()); ++j)
        if (all[j].order() == n) out.push_back(j);
    return out;
}

std::string SubgroupLattice::addr(int idx) const {
    return std::to_string(all[idx].order()) + "#" + std::to_string(order_rank[idx]);
}

int SubgroupLattice::by_addr(int order, int rank) const {
    for (int j = 0; j < static_cast<int>(all.size()); ++j)
        if (all[j].order() == order && order_rank[j] == rank) return j;
    return -1;
}

SubgroupLattice enumerate_subgroups(const FiniteGroup& g, const Config& cfg) {
    if (g.order() > cfg.lattice_cap)
        throw LatticeExceedsCap(cfg.lattice_cap, "|G| = " + std::to_string(g.order()));

    struct Entry {
        Subgroup sub;
        std::vector<int> gens;
    };
    std::map<std::vector<int>, int> seen;
    std::vector<Entry> found;

    auto add = [&](Subgroup s, std::vector<int> gens) -> int {
        auto it = seen.find(s.members);
        if (it != seen.end()) return it->second;
        int idx = static_cast<int>(found.size());
        seen[s.members] = idx;
        found.push_back({std::move(s), std::move(gens)});
        return idx;
    };

    add(trivial_subgroup(g), {});
    // Grow every known subgroup by one element until no new subgroup appears.
    for (size_t i = 0; i < found.size(); ++i) {
        for (int x = 0; x < g.order(); ++x) {
            if (found[i].sub.contains(x)) continue;
            std::vector<int> gens = found[i].gens;
            gens.push_back(x);
            add(subgroup_generated(g, gens), gens);
        }
        if (found.size() > 200000)
            throw LatticeExceedsCap(cfg.lattice_cap, "subgroup count explosion");
    }

    std::vector<int> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (found[a].sub.order() != found[b].sub.order())
            return found[a].sub.order() < found[b].sub.order();
        return found[a].sub.members < found[b].sub.members;
    });

    SubgroupLattice lat;
    lat.g = &g;
    lat.all.reserve(found.size());
    for (int src : order) {
        lat.all.push_back(std::move(found[src].sub));
        lat.gens.push_back(std::move(found[src].gens));
    }
    const int m = static_cast<int>(lat.all.size());
    lat.order_rank.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        lat.by_members_[lat.all[i].members] = i;
        lat.order_rank[i] = (i > 0 && lat.all[i - 1].order() == lat.all[i].order())
                                ? lat.order_rank[i - 1] + 1
                                : 0;
    }
    lat.trivial_idx = 0;
    lat.whole_idx = m - 1;

    lat.contains_sub.assign(m, Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (lat.all[j].order() <= lat.all[i].order() && lat.all[j].mask.subset_of(lat.all[i].mask))
                lat.contains_sub[i].set(j);

    lat.normal.assign(m, 0);
    Subgroup whole = whole_group(g);
    for (int i = 0; i < m; ++i) {
        bool ok = true;
        for (int x = 0; x < g.order() && ok; ++x)
            for (int gen : lat.gens[i])
                if (!lat.all[i].mask.test(g.conj(gen, x))) {
                    ok = false;
                    break;
                }
        lat.normal[i] = ok ? 1 : 0;
    }
    return lat;
}

bool normal_in_member(const SubgroupLattice& lat, int sub_idx, int ambient_idx) {
    const Subgroup& h = lat.all[sub_idx];
    const Subgroup& a = lat.all[ambient_idx];
    if (!lat.contains(ambient_idx, sub_idx)) return false;
    if (lat.normal[sub_idx]) return true;  // normal in G implies normal in any ambient
    const FiniteGroup& g = *lat.g;
    for (int x : a.members)
        for (int gen : lat.gens[sub_idx])
            if (!h.mask.test(g.conj(gen, x))) return false;
    return true;
}

Subgroup sylow_subgroup(const FiniteGroup& g, int p) {
    const int target = p_part(g.order(), p);
    if (target == 1) return trivial_subgroup(g);
    // Seed: lexicographically least <x> with |x| = p.
    Subgroup best;
    bool have = false;
    for (int x = 1; x < g.order(); ++x) {
        if (g.element_order(x) != p) continue;
        Subgroup cand = subgroup_generated(g, {x});
        if (!have || cand.members < best.members) {
            best = std::move(cand);
            have = true;
        }
    }
    Subgroup cur = best;
    while (cur.order() < target) {
        Subgroup n = normalizer(cur);
        Subgroup next;
        bool found = false;
        for (int y : n.members) {
            if (cur.contains(y)) continue;
            if (!is_p_power(g.element_order(y), p)) continue;
            std::vector<int> gens = cur.members;
            gens.push_back(y);
            Subgroup cand = subgroup_generated(g, gens);
            if (!is_p_power(cand.order(), p)) continue;
            if (!found || cand.members < next.members) {
                next = std::move(cand);
                found = true;
            }
        }
        if (!found) throw Error("sylow extension stalled");  // cannot happen
        cur = std::move(next);
    }
    return cur;
}

int sylow_index(const SubgroupLattice& lat, int p) {
    const int target = p_part(lat.g->order(), p);
    for (int i = 0; i < static_cast<int>(lat.all.size()); ++i)
        if (lat.all[i].order() == target) return i;
    throw Error("no Sylow subgroup of order " + std::to_string(target));
}

std::vector<int> maximal_subgroups_of(const SubgroupLattice& lat, int idx) {
    std::vector<int> inside = lat.subgroups_within(idx);
    std::vector<int> out;
    for (int h : inside) {
        if (h == idx) continue;
        bool maximal = true;
        for (int l : inside) {
            if (l == idx || l == h) continue;
            if (lat.contains(l, h)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(h);
    }
    return out;
}

namespace {

std::vector<int> normal_members_within(const SubgroupLattice& lat, int ambient_idx) {
    std::vector<int> out;
    for (int j : lat.subgroups_within(ambient_idx))
        if (normal_in_member(lat, j, ambient_idx)) out.push_back(j);
    return out;
}

int join_indices(const SubgroupLattice& lat, const std::vector<int>& idxs) {
    std::vector<int> gens;
    for (int i : idxs)
        gens.insert(gens.end(), lat.gens[i].begin(), lat.gens[i].end());
    Subgroup j = subgroup_generated(*lat.g, gens);
    int idx = lat.index_of(j);
    if (idx < 0) throw Error("join of subgroups missing from lattice");
    return idx;
}

Subgroup centre_of_member(const SubgroupLattice& lat, int idx) {
    return centralizer_in(lat.all[idx], lat.all[idx]);
}

}  // namespace

bool is_subnormal_in(const SubgroupLattice& lat, int sub_idx, int ambient_idx) {
    if (!lat.contains(ambient_idx, sub_idx)) return false;
    const FiniteGroup& g = *lat.g;
    int cur = ambient_idx;
    while (cur != sub_idx) {
        // normal closure of sub in cur
        std::vector<int> gens;
        for (int x : lat.all[cur].members)
            for (int gen : lat.gens[sub_idx]) gens.push_back(g.conj(gen, x));
        Subgroup clo = subgroup_generated(g, gens);
        int next = lat.index_of(clo);
        if (next < 0) throw Error("normal closure missing from lattice");
        if (next == cur) return false;  // stabilized above sub
        cur = next;
    }
    return true;
}

std::vector<int> components_within(const SubgroupLattice& lat, int ambient_idx) {
    std::vector<int> comps;
    for (int l : lat.subgroups_within(ambient_idx)) {
        const Subgroup& s = lat.all[l];
        if (s.order() == 1) continue;
        if (commutator_subgroup(s).members != s.members) continue;  // perfect
        if (!is_subnormal_in(lat, l, ambient_idx)) continue;
        // L/Z(L) simple: no normal subgroup of L strictly between Z(L) and L
        Subgroup z = centre_of_member(lat, l);
        if (z.order() == s.order()) continue;
        int z_idx = lat.index_of(z);
        bool simple = true;
        for (int m : lat.subgroups_within(l)) {
            if (m == l || m == z_idx) continue;
            if (!lat.contains(m, z_idx)) continue;
            if (normal_in_member(lat, m, l)) {
                simple = false;
                break;
            }
        }
        if (simple) comps.push_back(l);
    }
    return comps;
}

Subgroup fitting_within(const SubgroupLattice& lat, int ambient_idx) {
    std::vector<int> normals = normal_members_within(lat, ambient_idx);
    std::vector<int> parts;
    for (int p : lat.g->primes()) {
        std::vector<int> p_normals;
        for (int i : normals)
            if (is_p_power(lat.all[i].order(), p)) p_normals.push_back(i);
        if (!p_normals.empty()) parts.push_back(join_indices(lat, p_normals));
    }
    if (parts.empty()) return trivial_subgroup(*lat.g);
    return lat.all[join_indices(lat, parts)];
}

Subgroup gen_fitting_within(const SubgroupLattice& lat, int ambient_idx) {
    std::vector<int> parts = components_within(lat, ambient_idx);
    int f_idx = lat.index_of(fitting_within(lat, ambient_idx));
    parts.push_back(f_idx);
    return lat.all[join_indices(lat, parts)];
}

CharacteristicSubgroups core_subgroups(const SubgroupLattice& lat) {
    const FiniteGroup& g = *lat.g;
    CharacteristicSubgroups cs;
    std::vector<int> normals;
    for (int i = 0; i < static_cast<int>(lat.all.size()); ++i)
        if (lat.normal[i]) normals.push_back(i);

    for (int p : g.primes()) {
        std::vector<int> ps, pprimes;
        for (int i : normals) {
            if (is_p_power(lat.all[i].order(), p)) ps.push_back(i);
            if (lat.all[i].order() % p != 0) pprimes.push_back(i);
        }
        cs.o_p[p] = lat.all[ps.empty() ? lat.trivial_idx : join_indices(lat, ps)];
        cs.o_p_prime[p] = lat.all[pprimes.empty() ? lat.trivial_idx : join_indices(lat, pprimes)];
    }

    Subgroup phi = whole_group(g);
    for (int m : maximal_subgroups_of(lat, lat.whole_idx)) phi = intersect(phi, lat.all[m]);
    cs.frattini = std::move(phi);

    cs.fitting = fitting_within(lat, lat.whole_idx);
    for (int c : components_within(lat, lat.whole_idx)) cs.components.push_back(lat.all[c]);
    cs.gen_fitting = gen_fitting_within(lat, lat.whole_idx);

    // Upper central series by direct commutator membership.
    Bitset z(g.order());
    z.set(FiniteGroup::kIdentity);
    while (true) {
        std::vector<int> next;
        for (int x = 0; x < g.order(); ++x) {
            bool in = true;
            for (int y = 0; y < g.order(); ++y)
                if (!z.test(g.comm(x, y))) {
                    in = false;
                    break;
                }
            if (in) next.push_back(x);
        }
        Subgroup zn = subgroup_from_members(g, next);
        if (!cs.upper_central.empty() && zn.order() == cs.upper_central.back().order()) break;
        if (cs.upper_central.empty() && zn.order() == 1) {
            cs.upper_central.push_back(zn);
            break;
        }
        cs.upper_central.push_back(zn);
        z = cs.upper_central.back().mask;
        if (zn.order() == g.order()) break;
    }
    cs.hypercentre_nilpotent = cs.upper_central.back();
    return cs;
}

}  // namespace capf
