#include "capfusion/fusion.hpp"

#include <algorithm>
#include <set>

#include "capfusion/errors.hpp"

namespace capf {

FusionSystem fusion_system(GroupCtx& ctx, int p) {
    FusionSystem fs;
    fs.ctx = &ctx;
    fs.p = p;
    fs.sylow_idx = ctx.sylow(p);
    return fs;
}

bool is_strongly_closed(const FusionSystem& fs, const Subgroup& q) {
    const FiniteGroup& g = fs.ctx->group;
    const Subgroup& s = fs.ctx->lat.all[fs.sylow_idx];
    for (int x : q.members) {
        for (int t = 0; t < g.order(); ++t) {
            int y = g.conj(x, t);
            if (s.mask.test(y) && !q.mask.test(y)) return false;
        }
    }
    return true;
}

bool is_strongly_closed_morphism(const FusionSystem& fs, int q_idx) {
    const SubgroupLattice& lat = fs.ctx->lat;
    const FiniteGroup& g = fs.ctx->group;
    const Subgroup& q = lat.all[q_idx];
    const Subgroup& s = lat.all[fs.sylow_idx];
    for (int p_idx : lat.subgroups_within(q_idx)) {
        const Subgroup& sub = lat.all[p_idx];
        for (int t = 0; t < g.order(); ++t) {
            Subgroup img = conjugate_subgroup(sub, t);
            if (img.mask.subset_of(s.mask) && !img.mask.subset_of(q.mask)) return false;
        }
    }
    return true;
}

const std::vector<int>& strongly_closed_subgroups(const FusionSystem& fs) {
    auto it = fs.ctx->strongly_closed_cache.find(fs.p);
    if (it != fs.ctx->strongly_closed_cache.end()) return it->second;
    std::vector<int> out;
    for (int j : fs.ctx->lat.subgroups_within(fs.sylow_idx)) {
        // strongly closed members are normal in S; cheap pre-filter
        if (!normal_in_member(fs.ctx->lat, j, fs.sylow_idx)) continue;
        if (is_strongly_closed(fs, fs.ctx->lat.all[j])) out.push_back(j);
    }
    return fs.ctx->strongly_closed_cache.emplace(fs.p, std::move(out)).first->second;
}

namespace {

// Q_next/Q is cyclic iff Q_next = Q<x> for some x.
bool cyclic_step(const FiniteGroup& g, const Subgroup& q, const Subgroup& q_next) {
    for (int x : q_next.members) {
        Subgroup cyc = subgroup_generated(g, {x});
        long prod = static_cast<long>(q.order()) * cyc.order() / intersect(q, cyc).order();
        if (prod == q_next.order()) return true;
    }
    return false;
}

}  // namespace

FusionChainResult is_supersolvable_fusion(const FusionSystem& fs) {
    auto hit = fs.ctx->fusion_ss_cache.find(fs.p);
    if (hit != fs.ctx->fusion_ss_cache.end()) {
        FusionChainResult r;
        r.supersolvable = hit->second.first;
        if (r.supersolvable)
            r.chain = hit->second.second;
        else
            r.frontier = hit->second.second;
        return r;
    }

    const SubgroupLattice& lat = fs.ctx->lat;
    const FiniteGroup& g = fs.ctx->group;
    const std::vector<int>& closed = strongly_closed_subgroups(fs);
    const int n = static_cast<int>(closed.size());
    std::vector<int> parent(n, -1);
    std::vector<char> reach(n, 0);
    int start = -1, goal = -1;
    for (int i = 0; i < n; ++i) {
        if (closed[i] == lat.trivial_idx) start = i;
        if (closed[i] == fs.sylow_idx) goal = i;
    }
    reach[start] = 1;
    // BFS forward over single steps with normal inclusion and cyclic quotient.
    std::vector<int> queue{start};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int cur = queue[qi];
        for (int nxt = 0; nxt < n; ++nxt) {
            if (reach[nxt] || !lat.contains(closed[nxt], closed[cur])) continue;
            if (closed[nxt] == closed[cur]) continue;
            if (!normal_in_member(lat, closed[cur], closed[nxt])) continue;
            if (!cyclic_step(g, lat.all[closed[cur]], lat.all[closed[nxt]])) continue;
            reach[nxt] = 1;
            parent[nxt] = cur;
            queue.push_back(nxt);
        }
    }

    FusionChainResult result;
    result.supersolvable = reach[goal] != 0;
    if (result.supersolvable) {
        for (int cur = goal; cur != -1; cur = parent[cur]) result.chain.push_back(closed[cur]);
        std::reverse(result.chain.begin(), result.chain.end());
    } else {
        // maximal reachable strongly closed members
        for (int i = 0; i < n; ++i) {
            if (!reach[i]) continue;
            bool maximal = true;
            for (int j = 0; j < n; ++j)
                if (j != i && reach[j] && lat.contains(closed[j], closed[i])) maximal = false;
            if (maximal) result.frontier.push_back(closed[i]);
        }
    }
    fs.ctx->fusion_ss_cache.emplace(
        fs.p, std::make_pair(result.supersolvable,
                             result.supersolvable ? result.chain : result.frontier));
    return result;
}

namespace {

// Distinct G-conjugates of q that land inside S.
std::vector<Subgroup> conjugates_in_sylow(const FusionSystem& fs, int q_idx) {
    const FiniteGroup& g = fs.ctx->group;
    const Subgroup& q = fs.ctx->lat.all[q_idx];
    const Subgroup& s = fs.ctx->lat.all[fs.sylow_idx];
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    for (int t = 0; t < g.order(); ++t) {
        Subgroup img = conjugate_subgroup(q, t);
        if (!img.mask.subset_of(s.mask)) continue;
        if (seen.insert(img.members).second) out.push_back(std::move(img));
    }
    return out;
}

}  // namespace

bool is_centric(const FusionSystem& fs, int q_idx) {
    const Subgroup& s = fs.ctx->lat.all[fs.sylow_idx];
    for (const Subgroup& img : conjugates_in_sylow(fs, q_idx)) {
        Subgroup c = centralizer_in(img, s);
        if (!c.mask.subset_of(img.mask)) return false;  // C_S(img) must equal Z(img)
    }
    return true;
}

bool is_fully_normalized(const FusionSystem& fs, int q_idx) {
    const Subgroup& s = fs.ctx->lat.all[fs.sylow_idx];
    const Subgroup& q = fs.ctx->lat.all[q_idx];
    int own = normalizer_in(q, s).order();
    for (const Subgroup& img : conjugates_in_sylow(fs, q_idx))
        if (normalizer_in(img, s).order() > own) return false;
    return true;
}

namespace {

Perm conj_action(const FiniteGroup& g, const Subgroup& q, int t) {
    Perm images(q.members.size());
    for (size_t i = 0; i < q.members.size(); ++i) {
        int y = g.conj(q.members[i], t);
        auto it = std::lower_bound(q.members.begin(), q.members.end(), y);
        images[i] = static_cast<int>(it - q.members.begin());
    }
    return images;
}

}  // namespace

FiniteGroup aut_f(const FusionSystem& fs, int q_idx) {
    const FiniteGroup& g = fs.ctx->group;
    const Subgroup& q = fs.ctx->lat.all[q_idx];
    Subgroup n = normalizer(q);
    std::set<Perm> perms;
    for (int t : n.members) perms.insert(conj_action(g, q, t));
    std::vector<Element> gens;
    for (const Perm& p : perms) gens.push_back(make_perm(p));
    return FiniteGroup::from_generators("AutF(" + fs.ctx->lat.addr(q_idx) + ")", gens,
                                        fs.ctx->cfg.order_cap);
}

FiniteGroup out_f(const FusionSystem& fs, int q_idx) {
    const FiniteGroup& g = fs.ctx->group;
    const Subgroup& q = fs.ctx->lat.all[q_idx];
    FiniteGroup aut = aut_f(fs, q_idx);
    std::vector<int> inner;
    for (int t : q.members) {
        auto idx = aut.index_of(make_perm(conj_action(g, q, t)));
        inner.push_back(*idx);
    }
    Subgroup inn = subgroup_generated(aut, inner);
    QuotientGroup quo = quotient(aut, inn);
    FiniteGroup out = std::move(quo.group);
    out.set_name("OutF(" + fs.ctx->lat.addr(q_idx) + ")");
    return out;
}

bool has_strongly_p_embedded(const FiniteGroup& g, int p, const Config& cfg) {
    if (g.order() % p != 0) return false;
    Config sub_cfg = cfg;
    sub_cfg.lattice_cap = std::max(sub_cfg.lattice_cap, static_cast<long>(g.order()));
    SubgroupLattice lat = enumerate_subgroups(g, sub_cfg);
    for (const Subgroup& h : lat.all) {
        if (h.order() == g.order() || h.order() % p != 0) continue;
        bool embedded = true;
        for (int x = 0; x < g.order() && embedded; ++x) {
            if (h.contains(x)) continue;
            Subgroup hx = conjugate_subgroup(h, x);
            if (intersect(h, hx).order() % p == 0) embedded = false;
        }
        if (embedded) return true;
    }
    return false;
}

std::vector<int> essential_star_set(const FusionSystem& fs) {
    std::vector<int> out;
    for (int j : fs.ctx->lat.subgroups_within(fs.sylow_idx)) {
        if (j == fs.sylow_idx) continue;
        if (!is_centric(fs, j)) continue;
        if (!is_fully_normalized(fs, j)) continue;
        FiniteGroup o = out_f(fs, j);
        if (has_strongly_p_embedded(o, fs.p, fs.ctx->cfg)) out.push_back(j);
    }
    out.push_back(fs.sylow_idx);
    return out;
}

OwnedFusion normalizer_fusion(const FusionSystem& fs, int q_idx) {
    if (!is_fully_normalized(fs, q_idx)) throw NotFullyNormalized();
    const SubgroupLattice& lat = fs.ctx->lat;
    Subgroup n = normalizer(lat.all[q_idx]);
    Subgroup ns = normalizer_in(lat.all[q_idx], lat.all[fs.sylow_idx]);
    MaterializedSubgroup mat = materialize(n);
    std::vector<int> ns_members = mat.image(ns).members;
    OwnedFusion owned;
    owned.p = fs.p;
    owned.ctx = make_ctx(std::move(mat.group), fs.ctx->cfg);
    Subgroup ns_img = subgroup_from_members(owned.ctx->group, ns_members);
    int ns_idx = owned.ctx->lat.index_of(ns_img);
    if (ns_idx < 0) throw Error("N_S(q) missing from normalizer lattice");
    int syl = owned.ctx->sylow(fs.p);
    if (owned.ctx->lat.all[syl].order() != ns_img.order())
        throw Error("N_S(q) is not Sylow in N_G(q) despite full normalization");
    owned.sylow_idx = ns_idx;
    return owned;
}

}  // namespace capf
