#include "capfusion/chief.hpp"

#include <algorithm>

#include "capfusion/errors.hpp"

namespace capf {

GroupCtx::GroupCtx(FiniteGroup g, const Config& c) : group(std::move(g)), cfg(c) {}

std::unique_ptr<GroupCtx> make_ctx(FiniteGroup g, const Config& cfg) {
    auto ctx = std::make_unique<GroupCtx>(std::move(g), cfg);
    ctx->lat = enumerate_subgroups(ctx->group, cfg);
    return ctx;
}

const std::vector<int>& GroupCtx::normals_in(int ambient_idx) {
    auto it = normals_in_.find(ambient_idx);
    if (it != normals_in_.end()) return it->second;
    std::vector<int> out;
    for (int j : lat.subgroups_within(ambient_idx))
        if (normal_in_member(lat, j, ambient_idx)) out.push_back(j);
    return normals_in_.emplace(ambient_idx, std::move(out)).first->second;
}

const std::vector<std::vector<int>>& GroupCtx::poset_succ(int ambient_idx) {
    auto it = succ_.find(ambient_idx);
    if (it != succ_.end()) return it->second;
    const std::vector<int>& normals = normals_in(ambient_idx);
    const int m = static_cast<int>(normals.size());
    std::vector<std::vector<int>> succ(m);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            int k = normals[a], h = normals[b];
            if (k == h || !lat.contains(h, k)) continue;
            bool covered = false;
            for (int c = 0; c < m && !covered; ++c) {
                int l = normals[c];
                if (l == k || l == h) continue;
                if (lat.contains(l, k) && lat.contains(h, l)) covered = true;
            }
            if (!covered) succ[a].push_back(h);
        }
    }
    return succ_.emplace(ambient_idx, std::move(succ)).first->second;
}

const std::vector<ChiefFactor>& GroupCtx::chief_factors(int ambient_idx) {
    auto it = factors_.find(ambient_idx);
    if (it != factors_.end()) return it->second;
    const std::vector<int>& normals = normals_in(ambient_idx);
    const auto& succ = poset_succ(ambient_idx);
    std::vector<ChiefFactor> out;
    for (size_t a = 0; a < normals.size(); ++a) {
        for (int h : succ[a]) {
            ChiefFactor f;
            f.lower = normals[a];
            f.upper = h;
            f.order = lat.all[h].order() / lat.all[f.lower].order();
            out.push_back(f);
        }
    }
    return factors_.emplace(ambient_idx, std::move(out)).first->second;
}

int GroupCtx::sylow(int p) {
    auto it = sylow_.find(p);
    if (it != sylow_.end()) return it->second;
    int idx = sylow_index(lat, p);
    sylow_[p] = idx;
    return idx;
}

const GroupClassFlags& GroupCtx::class_flags() {
    if (!flags_) flags_ = classify(*this);
    return *flags_;
}

std::vector<ChiefFactor> all_chief_factors(GroupCtx& ctx) {
    return ctx.chief_factors(ctx.lat.whole_idx);
}

bool is_pd_factor(const ChiefFactor& f, int p) { return f.order % p == 0; }

namespace {

bool prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool prime_power(int n, int p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

int pos_in(const std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) return -1;
    return static_cast<int>(it - v.begin());
}

}  // namespace

bool is_u_central(const ChiefFactor& f) { return prime(f.order); }

std::vector<ChiefSeries> all_chief_series(GroupCtx& ctx) {
    const int ambient = ctx.lat.whole_idx;
    const std::vector<int>& normals = ctx.normals_in(ambient);
    const auto& succ = ctx.poset_succ(ambient);
    std::vector<ChiefSeries> out;
    std::vector<int> chain{ctx.lat.trivial_idx};

    // DFS over maximal chains of the normal poset.
    auto dfs = [&](auto&& self, int cur_pos) -> void {
        if (normals[cur_pos] == ambient) {
            ChiefSeries s;
            s.chain = chain;
            for (size_t i = 0; i + 1 < chain.size(); ++i) {
                ChiefFactor f;
                f.lower = chain[i];
                f.upper = chain[i + 1];
                f.order = ctx.lat.all[f.upper].order() / ctx.lat.all[f.lower].order();
                s.factors.push_back(f);
            }
            out.push_back(std::move(s));
            if (static_cast<long>(out.size()) > ctx.cfg.series_cap)
                throw SeriesExplosion(ctx.cfg.series_cap);
            return;
        }
        for (int nxt : succ[cur_pos]) {
            chain.push_back(nxt);
            self(self, pos_in(normals, nxt));
            chain.pop_back();
        }
    };
    dfs(dfs, pos_in(normals, ctx.lat.trivial_idx));
    return out;
}

Subgroup u_hypercentre(GroupCtx& ctx) {
    const std::vector<int>& normals = ctx.normals_in(ctx.lat.whole_idx);
    const auto& succ = ctx.poset_succ(ctx.lat.whole_idx);
    int z = ctx.lat.trivial_idx;
    while (true) {
        int zpos = pos_in(normals, z);
        std::vector<int> grow;
        for (int h : succ[zpos]) {
            int ord = ctx.lat.all[h].order() / ctx.lat.all[z].order();
            if (prime(ord)) grow.push_back(h);
        }
        if (grow.empty()) break;
        std::vector<int> gens = ctx.lat.gens[z];
        for (int h : grow)
            gens.insert(gens.end(), ctx.lat.gens[h].begin(), ctx.lat.gens[h].end());
        Subgroup next = subgroup_generated(ctx.group, gens);
        int next_idx = ctx.lat.index_of(next);
        if (next_idx < 0) throw Error("hypercentre join missing from lattice");
        if (next_idx == z) break;
        z = next_idx;
    }
    return ctx.lat.all[z];
}

namespace {

// First maximal chain of the normal poset in canonical order.
std::vector<ChiefFactor> first_chief_series(GroupCtx& ctx) {
    const std::vector<int>& normals = ctx.normals_in(ctx.lat.whole_idx);
    const auto& succ = ctx.poset_succ(ctx.lat.whole_idx);
    std::vector<ChiefFactor> fs;
    int cur = ctx.lat.trivial_idx;
    while (cur != ctx.lat.whole_idx) {
        int pos = pos_in(normals, cur);
        int nxt = succ[pos].front();
        ChiefFactor f;
        f.lower = cur;
        f.upper = nxt;
        f.order = ctx.lat.all[nxt].order() / ctx.lat.all[cur].order();
        fs.push_back(f);
        cur = nxt;
    }
    return fs;
}

}  // namespace

GroupClassFlags classify(GroupCtx& ctx) {
    GroupClassFlags flags;
    const FiniteGroup& g = ctx.group;
    std::vector<ChiefFactor> series = first_chief_series(ctx);

    for (int p : g.primes()) {
        bool psolv = true, psuper = true;
        for (const auto& f : series) {
            bool pd = f.order % p == 0;
            if (pd && !prime_power(f.order, p)) psolv = false;
            if (pd && f.order != p) psuper = false;
        }
        psuper = psuper && psolv;
        flags.p_solvable[p] = psolv;
        flags.p_supersolvable[p] = psuper;
    }

    flags.solvable = true;
    flags.supersolvable = true;
    for (const auto& f : series) {
        bool pp = false;
        for (int p : g.primes())
            if (prime_power(f.order, p)) pp = true;
        if (!pp) flags.solvable = false;
        if (!prime(f.order)) flags.supersolvable = false;
    }

    // p-nilpotent: O_{p'}(G) is a normal p-complement.
    for (int p : g.primes()) {
        int ppart = 1, rest = g.order();
        while (rest % p == 0) {
            rest /= p;
            ppart *= p;
        }
        std::vector<int> pprimes;
        for (int i : ctx.normals_in(ctx.lat.whole_idx))
            if (ctx.lat.all[i].order() % p != 0) pprimes.push_back(i);
        int best = 1;
        for (int i : pprimes) best = std::max(best, ctx.lat.all[i].order());
        flags.p_nilpotent[p] = (best == rest);
    }

    Subgroup z(trivial_subgroup(g));
    {
        Bitset cur(g.order());
        cur.set(FiniteGroup::kIdentity);
        while (true) {
            std::vector<int> next;
            for (int x = 0; x < g.order(); ++x) {
                bool in = true;
                for (int y = 0; y < g.order(); ++y)
                    if (!cur.test(g.comm(x, y))) {
                        in = false;
                        break;
                    }
                if (in) next.push_back(x);
            }
            Subgroup zn = subgroup_from_members(g, next);
            if (zn.mask == cur) {
                z = zn;
                break;
            }
            cur = zn.mask;
            if (zn.order() == g.order()) {
                z = zn;
                break;
            }
        }
    }
    flags.nilpotent = (z.order() == g.order());
    flags.u_hypercentre = u_hypercentre(ctx);
    return flags;
}

bool supersolvable_above(GroupCtx& ctx, int normal_idx) {
    const std::vector<int>& normals = ctx.normals_in(ctx.lat.whole_idx);
    const auto& succ = ctx.poset_succ(ctx.lat.whole_idx);
    int cur = normal_idx;
    while (cur != ctx.lat.whole_idx) {
        int pos = pos_in(normals, cur);
        int nxt = -1;
        for (int h : succ[pos]) {
            nxt = h;
            break;
        }
        if (nxt < 0) throw Error("normal poset has no path to the whole group");
        if (!prime(ctx.lat.all[nxt].order() / ctx.lat.all[cur].order())) return false;
        cur = nxt;
    }
    return true;
}

}  // namespace capf
