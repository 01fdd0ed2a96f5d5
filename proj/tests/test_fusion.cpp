#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "capfusion/builders.hpp"
#include "capfusion/corpus.hpp"
#include "capfusion/errors.hpp"
#include "capfusion/fusion.hpp"

using namespace capf;

namespace {

std::unique_ptr<GroupCtx> ctx_of(const std::string& name) {
    return make_ctx(build_group(parse_builtin(name, 2000), 2000));
}

std::multiset<int> sc_orders(GroupCtx& ctx, int p) {
    FusionSystem fs = fusion_system(ctx, p);
    std::multiset<int> out;
    for (int idx : strongly_closed_subgroups(fs)) out.insert(ctx.lat.all[idx].order());
    return out;
}

}  // namespace

TEST_CASE("strong closure basics") {
    auto a4 = ctx_of("A4");
    FusionSystem fs = fusion_system(*a4, 2);
    CHECK(a4->lat.all[fs.sylow_idx].order() == 4);  // S = V4
    CHECK(is_strongly_closed(fs, a4->lat.all[fs.sylow_idx]));
    CHECK(is_strongly_closed(fs, trivial_subgroup(a4->group)));
    // a 3-cycle fuses the involutions of V4, so no order-2 subgroup is closed
    for (int idx : a4->lat.subgroups_within(fs.sylow_idx))
        if (a4->lat.all[idx].order() == 2)
            CHECK_FALSE(is_strongly_closed(fs, a4->lat.all[idx]));
    CHECK(sc_orders(*a4, 2) == std::multiset<int>{1, 4});
}

TEST_CASE("strongly closed subgroups of a p-group are its normal subgroups") {
    for (const char* name : {"Q8", "D8", "C4 x C4", "C2 x C2 x C2"}) {
        CAPTURE(name);
        auto ctx = ctx_of(name);
        int p = ctx->group.primes().front();
        FusionSystem fs = fusion_system(*ctx, p);
        std::set<int> closed(strongly_closed_subgroups(fs).begin(),
                             strongly_closed_subgroups(fs).end());
        std::set<int> normals;
        for (int i = 0; i < static_cast<int>(ctx->lat.all.size()); ++i)
            if (ctx->lat.normal[i]) normals.insert(i);
        CHECK(closed == normals);
    }
}

TEST_CASE("A5 at p=5: strongly closed subgroups of the cyclic Sylow") {
    auto a5 = ctx_of("A5");
    CHECK(sc_orders(*a5, 5) == std::multiset<int>{1, 5});
}

TEST_CASE("strongly closed members are normal in S; element-wise matches morphism-level") {
    Config cfg;
    for (const GroupSpec& spec : generate_corpus(30, cfg).entries) {
        CAPTURE(spec.name);
        auto ctx = make_ctx(build_group(spec, cfg.order_cap), cfg);
        for (int p : ctx->group.primes()) {
            FusionSystem fs = fusion_system(*ctx, p);
            if (ctx->lat.all[fs.sylow_idx].order() > 64) continue;
            for (int q : ctx->lat.subgroups_within(fs.sylow_idx)) {
                bool element_wise = is_strongly_closed(fs, ctx->lat.all[q]);
                CHECK(element_wise == is_strongly_closed_morphism(fs, q));
                if (element_wise)
                    CHECK(normal_in_member(ctx->lat, q, fs.sylow_idx));
            }
        }
    }
}

TEST_CASE("supersolvable fusion fixtures") {
    auto a4 = ctx_of("A4");
    FusionChainResult r = is_supersolvable_fusion(fusion_system(*a4, 2));
    CHECK_FALSE(r.supersolvable);
    REQUIRE(!r.frontier.empty());  // refutation: maximal reachable frontier
    CHECK(a4->lat.all[r.frontier.front()].order() == 1);

    auto a5 = ctx_of("A5");
    FusionChainResult r5 = is_supersolvable_fusion(fusion_system(*a5, 5));
    CHECK(r5.supersolvable);
    std::vector<int> orders;
    for (int idx : r5.chain) orders.push_back(a5->lat.all[idx].order());
    CHECK(orders == std::vector<int>{1, 5});  // chain (1, C5)
    CHECK_FALSE(a5->class_flags().p_supersolvable.at(5));  // yet A5 is not 5-supersolvable

    auto s4 = ctx_of("S4");
    CHECK_FALSE(is_supersolvable_fusion(fusion_system(*s4, 2)).supersolvable);

    auto sl23 = ctx_of("SL(2,3)");
    CHECK_FALSE(is_supersolvable_fusion(fusion_system(*sl23, 2)).supersolvable);

    // cyclic Sylow always yields a supersolvable fusion system
    for (const char* name : {"S3", "C7:C3", "A5"}) {
        auto ctx = ctx_of(name);
        for (int p : ctx->group.primes()) {
            FusionSystem fs = fusion_system(*ctx, p);
            if (is_cyclic(ctx->lat.all[fs.sylow_idx]))
                CHECK(is_supersolvable_fusion(fs).supersolvable);
        }
    }
}

TEST_CASE("centric and fully normalized") {
    auto a4 = ctx_of("A4");
    FusionSystem fs = fusion_system(*a4, 2);
    CHECK(is_centric(fs, fs.sylow_idx));
    CHECK(is_fully_normalized(fs, fs.sylow_idx));
    CHECK_FALSE(is_centric(fs, a4->lat.trivial_idx));  // C_S(1) = S != 1
    for (int q : a4->lat.subgroups_within(fs.sylow_idx))
        if (a4->lat.all[q].order() == 2) CHECK_FALSE(is_centric(fs, q));  // C_S(q) = V4
}

TEST_CASE("fusion automorphism groups") {
    auto a4 = ctx_of("A4");
    FusionSystem fs2 = fusion_system(*a4, 2);
    FiniteGroup aut_v4 = aut_f(fs2, fs2.sylow_idx);
    CHECK(aut_v4.order() == 3);  // the 3-cycle action; inner part trivial
    CHECK(out_f(fs2, fs2.sylow_idx).order() == 3);

    auto a5 = ctx_of("A5");
    FusionSystem fs5 = fusion_system(*a5, 5);
    CHECK(aut_f(fs5, fs5.sylow_idx).order() == 2);  // N/C = D10/C5

    // q cyclic of order 2 has trivial automorphisms
    auto s4 = ctx_of("S4");
    FusionSystem fs = fusion_system(*s4, 2);
    for (int q : s4->lat.subgroups_within(fs.sylow_idx))
        if (s4->lat.all[q].order() == 2) CHECK(aut_f(fs, q).order() == 1);
}

TEST_CASE("essential star sets") {
    auto a4 = ctx_of("A4");
    FusionSystem fsa = fusion_system(*a4, 2);
    std::vector<int> ea = essential_star_set(fsa);
    CHECK(ea == std::vector<int>{fsa.sylow_idx});  // {V4} = {S}

    // p-group: only S itself
    auto d8 = ctx_of("D8");
    FusionSystem fsd = fusion_system(*d8, 2);
    CHECK(essential_star_set(fsd) == std::vector<int>{fsd.sylow_idx});

    // S4 at p=2: the normal Klein four-group besides S = D8
    auto s4 = ctx_of("S4");
    FusionSystem fss = fusion_system(*s4, 2);
    std::vector<int> es = essential_star_set(fss);
    REQUIRE(es.size() == 2);
    CHECK(s4->lat.all[es[0]].order() == 4);
    CHECK(s4->lat.normal[es[0]]);  // the regular Klein subgroup, normal in S4
    CHECK(es[1] == fss.sylow_idx);
}

TEST_CASE("normalizer fusion systems") {
    auto a5 = ctx_of("A5");
    FusionSystem fs = fusion_system(*a5, 5);
    OwnedFusion nf = normalizer_fusion(fs, fs.sylow_idx);
    CHECK(nf.ctx->group.order() == 10);  // N_A5(C5) = D10
    CHECK(nf.ctx->lat.all[nf.sylow_idx].order() == 5);
    CHECK(is_supersolvable_fusion(nf.view()).supersolvable);

    // q normal in G keeps the whole fusion system
    auto s4 = ctx_of("S4");
    FusionSystem fss = fusion_system(*s4, 2);
    int v4 = -1;
    for (int q : s4->lat.subgroups_within(fss.sylow_idx))
        if (s4->lat.all[q].order() == 4 && s4->lat.normal[q]) v4 = q;
    REQUIRE(v4 >= 0);
    OwnedFusion nfv = normalizer_fusion(fss, v4);
    CHECK(nfv.ctx->group.order() == 24);
    CHECK_FALSE(is_supersolvable_fusion(nfv.view()).supersolvable);

    // not fully normalized -> error
    bool threw = false;
    for (int q : s4->lat.subgroups_within(fss.sylow_idx)) {
        if (is_fully_normalized(fss, q)) continue;
        CHECK_THROWS_AS(normalizer_fusion(fss, q), NotFullyNormalized);
        threw = true;
        break;
    }
    CHECK(threw);
}

TEST_CASE("p-nilpotent groups have p-group fusion") {
    Config cfg;
    for (const GroupSpec& spec : generate_corpus(30, cfg).entries) {
        CAPTURE(spec.name);
        auto ctx = make_ctx(build_group(spec, cfg.order_cap), cfg);
        for (int p : ctx->group.primes()) {
            if (!ctx->class_flags().p_nilpotent.at(p)) continue;
            FusionSystem fs = fusion_system(*ctx, p);
            std::set<int> closed(strongly_closed_subgroups(fs).begin(),
                                 strongly_closed_subgroups(fs).end());
            std::set<int> normals_in_s;
            for (int q : ctx->lat.subgroups_within(fs.sylow_idx))
                if (normal_in_member(ctx->lat, q, fs.sylow_idx)) normals_in_s.insert(q);
            CHECK(closed == normals_in_s);
        }
    }
}

TEST_CASE("p-supersolvable groups have supersolvable fusion over the corpus") {
    Config cfg;
    for (const GroupSpec& spec : generate_corpus(40, cfg).entries) {
        CAPTURE(spec.name);
        auto ctx = make_ctx(build_group(spec, cfg.order_cap), cfg);
        for (int p : ctx->group.primes()) {
            if (!ctx->class_flags().p_supersolvable.at(p)) continue;
            CHECK(is_supersolvable_fusion(fusion_system(*ctx, p)).supersolvable);
        }
    }
}

TEST_CASE("normalizer-supersolvability criterion over the corpus") {
    // when every member of the essential star set has a supersolvable
    // normalizer fusion system, the whole system is supersolvable
    Config cfg;
    for (const GroupSpec& spec : generate_corpus(30, cfg).entries) {
        CAPTURE(spec.name);
        auto ctx = make_ctx(build_group(spec, cfg.order_cap), cfg);
        for (int p : ctx->group.primes()) {
            FusionSystem fs = fusion_system(*ctx, p);
            bool all_super = true;
            for (int q : essential_star_set(fs)) {
                OwnedFusion nf = normalizer_fusion(fs, q);
                if (!is_supersolvable_fusion(nf.view()).supersolvable) all_super = false;
            }
            if (all_super) CHECK(is_supersolvable_fusion(fs).supersolvable);
        }
    }
}

TEST_CASE("proper-subgroup criterion over the corpus") {
    // if every proper H with O_p(G) < S∩H and S∩H Sylow in H has
    // supersolvable fusion, and O_p(G) lies in the U-hypercentre, then
    // F_S(G) is supersolvable
    Config cfg;
    for (const GroupSpec& spec : generate_corpus(24, cfg).entries) {
        CAPTURE(spec.name);
        auto ctx = make_ctx(build_group(spec, cfg.order_cap), cfg);
        for (int p : ctx->group.primes()) {
            FusionSystem fs = fusion_system(*ctx, p);
            const Subgroup& s = ctx->lat.all[fs.sylow_idx];
            // O_p(G)
            int op = ctx->lat.trivial_idx;
            for (int i : ctx->normals_in(ctx->lat.whole_idx)) {
                int n = ctx->lat.all[i].order(), pp = 1;
                while (n % p == 0) {
                    n /= p;
                    pp *= p;
                }
                if (n == 1 && ctx->lat.all[i].order() > ctx->lat.all[op].order()) op = i;
            }
            if (!ctx->lat.all[op].mask.subset_of(ctx->class_flags().u_hypercentre.mask)) continue;

            bool premise = true;
            for (int h = 0; h < static_cast<int>(ctx->lat.all.size()) && premise; ++h) {
                if (h == ctx->lat.whole_idx) continue;
                Subgroup sh = intersect(s, ctx->lat.all[h]);
                if (sh.order() <= ctx->lat.all[op].order() ||
                    !ctx->lat.all[op].mask.subset_of(sh.mask))
                    continue;
                int p_part = 1, rest = ctx->lat.all[h].order();
                while (rest % p == 0) {
                    rest /= p;
                    p_part *= p;
                }
                if (sh.order() != p_part) continue;  // S∩H not Sylow in H
                MaterializedSubgroup mat = materialize(ctx->lat.all[h]);
                auto sub_ctx = make_ctx(std::move(mat.group), cfg);
                if (!is_supersolvable_fusion(fusion_system(*sub_ctx, p)).supersolvable)
                    premise = false;
            }
            if (premise) CHECK(is_supersolvable_fusion(fs).supersolvable);
        }
    }
}
