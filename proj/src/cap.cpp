#include "capfusion/cap.hpp"

#include <algorithm>

#include "capfusion/errors.hpp"

namespace capf {

std::string variant_name(CapVariant v, int p) {
    switch (v) {
        case CapVariant::Cap: return "cap";
        case CapVariant::PartialCap: return "partial";
        case CapVariant::PCap: return "pcap:" + std::to_string(p);
        case CapVariant::StrongCap: return "strong-cap";
        case CapVariant::StrongPCap: return "strong-pcap:" + std::to_string(p);
    }
    return "?";
}

bool covers(const Subgroup& a, const Subgroup& lower, const Subgroup& upper) {
    Bitset prod = product_set(a, lower);
    return upper.mask.subset_of(prod);
}

bool avoids(const Subgroup& a, const Subgroup& lower, const Subgroup& upper) {
    return (a.mask & upper.mask) == (a.mask & lower.mask);
}

bool covers_arith(const Subgroup& a, const Subgroup& lower, const Subgroup& upper) {
    long in_lower = (a.mask & lower.mask).count();
    long in_upper = (a.mask & upper.mask).count();
    return static_cast<long>(upper.order()) * in_lower == static_cast<long>(lower.order()) * in_upper;
}

bool avoids_arith(const Subgroup& a, const Subgroup& lower, const Subgroup& upper) {
    return (a.mask & upper.mask).count() == (a.mask & lower.mask).count();
}

CoverAvoidVerdict cover_avoid(GroupCtx& ctx, int subject_idx, const ChiefFactor& f) {
    CoverAvoidVerdict v;
    v.factor = f;
    const Subgroup& a = ctx.lat.all[subject_idx];
    v.covers = covers(a, ctx.lat.all[f.lower], ctx.lat.all[f.upper]);
    v.avoids = avoids(a, ctx.lat.all[f.lower], ctx.lat.all[f.upper]);
    return v;
}

namespace {

// Short-circuit cover-or-avoid: the avoid test is two popcounts, so run it
// first; fall back to the product-set cover test.
bool covers_or_avoids(GroupCtx& ctx, int subject_idx, const ChiefFactor& f) {
    const Subgroup& a = ctx.lat.all[subject_idx];
    const Subgroup& lo = ctx.lat.all[f.lower];
    const Subgroup& up = ctx.lat.all[f.upper];
    if (avoids(a, lo, up)) return true;
    return covers(a, lo, up);
}

int key_variant(CapVariant v) { return static_cast<int>(v); }

// Factor-universal scan in one fixed ambient; p = 0 means every factor.
bool cap_scan(GroupCtx& ctx, int subject_idx, int ambient_idx, int p, CapWitness& fail) {
    for (const ChiefFactor& f : ctx.chief_factors(ambient_idx)) {
        if (p != 0 && !is_pd_factor(f, p)) continue;
        if (!covers_or_avoids(ctx, subject_idx, f)) {
            fail.overgroup = ambient_idx;
            fail.lower = f.lower;
            fail.upper = f.upper;
            return false;
        }
    }
    return true;
}

// Memoized DFS over the normal-in-ambient poset: from `at`, can a chief
// series suffix be completed with every factor covered or avoided?
bool partial_dfs(GroupCtx& ctx, int subject_idx, int ambient_idx, int at,
                 std::map<int, char>& memo, std::map<int, int>& next_step) {
    if (at == ambient_idx) return true;
    auto it = memo.find(at);
    if (it != memo.end()) return it->second != 0;
    const std::vector<int>& normals = ctx.normals_in(ambient_idx);
    const auto& succ = ctx.poset_succ(ambient_idx);
    int pos = static_cast<int>(std::lower_bound(normals.begin(), normals.end(), at) - normals.begin());
    bool ok = false;
    for (int h : succ[pos]) {
        ChiefFactor f;
        f.lower = at;
        f.upper = h;
        f.order = ctx.lat.all[h].order() / ctx.lat.all[at].order();
        if (!covers_or_avoids(ctx, subject_idx, f)) continue;
        if (partial_dfs(ctx, subject_idx, ambient_idx, h, memo, next_step)) {
            next_step[at] = h;
            ok = true;
            break;
        }
    }
    memo[at] = ok ? 1 : 0;
    return ok;
}

}  // namespace

CapReport run_variant(GroupCtx& ctx, CapVariant v, int subject_idx, int p, int ambient_idx) {
    if (ambient_idx < 0) ambient_idx = ctx.lat.whole_idx;
    CapReport rep;
    rep.variant = v;
    rep.p = p;
    rep.subject = subject_idx;
    rep.ambient = ambient_idx;

    auto key = std::make_tuple(key_variant(v), p, subject_idx, ambient_idx);
    auto hit = ctx.cap_memo.find(key);
    if (hit != ctx.cap_memo.end()) {
        rep.holds = hit->second.holds;
        if (!rep.holds && hit->second.witness_over >= 0)
            rep.failure = CapWitness{hit->second.witness_over, hit->second.witness_lower,
                                     hit->second.witness_upper};
        if (rep.holds && v == CapVariant::PartialCap) rep.series = hit->second.witness_series;
        return rep;
    }

    GroupCtx::CapVerdict mem;
    switch (v) {
        case CapVariant::Cap:
        case CapVariant::PCap: {
            CapWitness fail;
            mem.holds = cap_scan(ctx, subject_idx, ambient_idx, v == CapVariant::Cap ? 0 : p, fail);
            if (!mem.holds) {
                mem.witness_over = fail.overgroup;
                mem.witness_lower = fail.lower;
                mem.witness_upper = fail.upper;
            }
            break;
        }
        case CapVariant::StrongCap:
        case CapVariant::StrongPCap: {
            mem.holds = true;
            for (int over : ctx.lat.overgroups_of(subject_idx)) {
                if (!ctx.lat.contains(ambient_idx, over)) continue;
                CapWitness fail;
                if (!cap_scan(ctx, subject_idx, over, v == CapVariant::StrongCap ? 0 : p, fail)) {
                    mem.holds = false;
                    mem.witness_over = fail.overgroup;
                    mem.witness_lower = fail.lower;
                    mem.witness_upper = fail.upper;
                    break;
                }
            }
            break;
        }
        case CapVariant::PartialCap: {
            std::map<int, char> memo;
            std::map<int, int> next_step;
            mem.holds = partial_dfs(ctx, subject_idx, ambient_idx, ctx.lat.trivial_idx, memo,
                                    next_step);
            if (mem.holds) {
                int cur = ctx.lat.trivial_idx;
                mem.witness_series.push_back(cur);
                while (cur != ambient_idx) {
                    cur = next_step.at(cur);
                    mem.witness_series.push_back(cur);
                }
            }
            break;
        }
    }
    ctx.cap_memo.emplace(key, mem);

    rep.holds = mem.holds;
    if (!rep.holds && mem.witness_over >= 0)
        rep.failure = CapWitness{mem.witness_over, mem.witness_lower, mem.witness_upper};
    if (rep.holds && v == CapVariant::PartialCap) rep.series = mem.witness_series;
    return rep;
}

CapReport is_cap(GroupCtx& ctx, int subject_idx, int ambient_idx) {
    return run_variant(ctx, CapVariant::Cap, subject_idx, 0, ambient_idx);
}
CapReport is_p_cap(GroupCtx& ctx, int subject_idx, int p, int ambient_idx) {
    return run_variant(ctx, CapVariant::PCap, subject_idx, p, ambient_idx);
}
CapReport is_partial_cap(GroupCtx& ctx, int subject_idx, int ambient_idx) {
    return run_variant(ctx, CapVariant::PartialCap, subject_idx, 0, ambient_idx);
}
CapReport is_strong_cap(GroupCtx& ctx, int subject_idx, int ambient_idx) {
    return run_variant(ctx, CapVariant::StrongCap, subject_idx, 0, ambient_idx);
}
CapReport is_strong_p_cap(GroupCtx& ctx, int subject_idx, int p, int ambient_idx) {
    return run_variant(ctx, CapVariant::StrongPCap, subject_idx, p, ambient_idx);
}

QuotientTransfer quotient_transfer(GroupCtx& ctx, int subject_idx, int kernel_idx,
                                   CapVariant variant, int p) {
    if (variant != CapVariant::PCap && variant != CapVariant::StrongPCap)
        throw UsageError("quotient_transfer supports pcap and strong-pcap only");
    if (!ctx.lat.normal[kernel_idx]) throw NotNormal();

    QuotientTransfer out;
    QuotientGroup quot = quotient(ctx.group, ctx.lat.all[kernel_idx]);
    Subgroup an = join(ctx.lat.all[subject_idx], ctx.lat.all[kernel_idx]);
    std::vector<int> image_members = quot.image(an).members;
    out.coset_of = quot.coset_of;
    out.lift = quot.lift;
    out.quotient_ctx = make_ctx(std::move(quot.group), ctx.cfg);
    Subgroup img = subgroup_from_members(out.quotient_ctx->group, image_members);
    int img_idx = out.quotient_ctx->lat.index_of(img);
    if (img_idx < 0) throw Error("quotient image missing from quotient lattice");
    out.report = run_variant(*out.quotient_ctx, variant, img_idx, p);
    return out;
}

}  // namespace capf
