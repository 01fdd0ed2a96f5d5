#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "capfusion/builders.hpp"
#include "capfusion/chief.hpp"
#include "capfusion/errors.hpp"
#include "oracles.hpp"

using namespace capf;

namespace {

std::unique_ptr<GroupCtx> ctx_of(const std::string& name) {
    return make_ctx(build_group(parse_builtin(name, 2000), 2000));
}

std::multiset<int> factor_orders(GroupCtx& ctx) {
    std::multiset<int> out;
    for (const ChiefFactor& f : all_chief_factors(ctx)) out.insert(f.order);
    return out;
}

}  // namespace

TEST_CASE("chief factors of the anchor groups") {
    auto sl25 = ctx_of("SL(2,5)");
    auto fs = all_chief_factors(*sl25);
    REQUIRE(fs.size() == 2);
    CHECK(factor_orders(*sl25) == std::multiset<int>{2, 60});

    auto sl23 = ctx_of("SL(2,3)");
    CHECK(factor_orders(*sl23) == std::multiset<int>{2, 4, 3});
    bool has_2_8 = false;
    for (const ChiefFactor& f : all_chief_factors(*sl23))
        has_2_8 |= sl23->lat.all[f.lower].order() == 2 && sl23->lat.all[f.upper].order() == 8;
    CHECK(has_2_8);  // (C2, Q8) of order 4

    auto a5 = ctx_of("A5");
    CHECK(factor_orders(*a5) == std::multiset<int>{60});  // simple
}

TEST_CASE("chief factors agree with the naive normal-pair oracle") {
    for (const char* name : {"S4", "SL(2,3)", "D12", "C2 x C6", "A4", "Q8"}) {
        CAPTURE(name);
        auto ctx = ctx_of(name);
        auto pairs = oracle::chief_pairs(ctx->group);
        std::set<std::pair<std::vector<int>, std::vector<int>>> got;
        for (const ChiefFactor& f : all_chief_factors(*ctx))
            got.insert({ctx->lat.all[f.lower].members, ctx->lat.all[f.upper].members});
        CHECK(got == pairs);
    }
}

TEST_CASE("chief series enumeration") {
    auto s4 = ctx_of("S4");
    auto series = all_chief_series(*s4);
    REQUIRE(series.size() == 1);  // 1 < V4 < A4 < S4
    std::vector<int> orders;
    for (int idx : series[0].chain) orders.push_back(s4->lat.all[idx].order());
    CHECK(orders == std::vector<int>{1, 4, 12, 24});

    auto v4 = ctx_of("C2 x C2");
    CHECK(all_chief_series(*v4).size() == 3);

    auto a5 = ctx_of("A5");
    CHECK(all_chief_series(*a5).size() == 1);

    Config tight;
    tight.series_cap = 2;
    auto c8 = make_ctx(build_group(parse_builtin("C2 x C2 x C2", 2000), 2000), tight);
    CHECK_THROWS_AS(all_chief_series(*c8), SeriesExplosion);
}

TEST_CASE("every factor lies on a series and vice versa") {
    for (const char* name : {"S4", "SL(2,3)", "C2 x C2 x C2", "D12", "S3 x S3"}) {
        CAPTURE(name);
        auto ctx = ctx_of(name);
        std::set<std::pair<int, int>> from_factors, from_series;
        for (const ChiefFactor& f : all_chief_factors(*ctx)) from_factors.insert({f.lower, f.upper});
        for (const ChiefSeries& s : all_chief_series(*ctx))
            for (const ChiefFactor& f : s.factors) from_series.insert({f.lower, f.upper});
        CHECK(from_factors == from_series);
    }
}

TEST_CASE("jordan-holder across all series") {
    for (const char* name :
         {"S4", "SL(2,3)", "C2 x C2 x C2", "D12", "C12", "A4", "S3 x S3", "Q8 x C3"}) {
        CAPTURE(name);
        auto ctx = ctx_of(name);
        auto series = all_chief_series(*ctx);
        REQUIRE(!series.empty());
        std::multiset<int> reference;
        for (const ChiefFactor& f : series[0].factors) reference.insert(f.order);
        for (const ChiefSeries& s : series) {
            std::multiset<int> orders;
            int product = 1;
            for (const ChiefFactor& f : s.factors) {
                orders.insert(f.order);
                product *= f.order;
            }
            CHECK(orders == reference);
            CHECK(product == ctx->group.order());
        }
    }
}

TEST_CASE("pd factors and U-centrality") {
    ChiefFactor f60{0, 0, 60}, f3{0, 0, 3}, f2{0, 0, 2}, f4{0, 0, 4};
    CHECK(is_pd_factor(f60, 2));
    CHECK_FALSE(is_pd_factor(f3, 2));
    CHECK(is_u_central(f2));
    CHECK_FALSE(is_u_central(f4));
    CHECK_FALSE(is_u_central(f60));

    auto sl25 = ctx_of("SL(2,5)");
    for (const ChiefFactor& f : all_chief_factors(*sl25)) CHECK(is_pd_factor(f, 2));
}

TEST_CASE("U-hypercentre") {
    auto s3 = ctx_of("S3");
    CHECK(u_hypercentre(*s3).order() == 6);  // factor orders 3 then 2

    auto a4 = ctx_of("A4");
    CHECK(u_hypercentre(*a4).order() == 1);  // V4 is minimal normal of order 4

    auto c6 = ctx_of("C6");
    CHECK(u_hypercentre(*c6).order() == 6);

    auto sl23 = ctx_of("SL(2,3)");
    CHECK(u_hypercentre(*sl23).order() == 2);

    // idempotent: every chief factor below Z_U is of prime order
    for (const char* name : {"S4", "SL(2,3)", "D12", "C5:C4"}) {
        CAPTURE(name);
        auto ctx = ctx_of(name);
        Subgroup z = u_hypercentre(*ctx);
        int z_idx = ctx->lat.index_of(z);
        for (const ChiefFactor& f : all_chief_factors(*ctx)) {
            if (!ctx->lat.contains(z_idx, f.upper)) continue;
            CHECK(is_u_central(f));
        }
    }
}

TEST_CASE("classification flags") {
    auto s4 = ctx_of("S4");
    const GroupClassFlags& f = s4->class_flags();
    CHECK(f.p_supersolvable.at(3));
    CHECK_FALSE(f.p_supersolvable.at(2));
    CHECK(f.solvable);
    CHECK_FALSE(f.supersolvable);
    CHECK_FALSE(f.nilpotent);

    auto a5 = ctx_of("A5");
    CHECK_FALSE(a5->class_flags().p_supersolvable.at(5));
    CHECK_FALSE(a5->class_flags().solvable);

    auto sl23 = ctx_of("SL(2,3)");
    CHECK_FALSE(sl23->class_flags().p_nilpotent.at(2));
    CHECK(sl23->class_flags().p_nilpotent.at(3));

    auto s3 = ctx_of("S3");
    CHECK(s3->class_flags().supersolvable);
    CHECK_FALSE(s3->class_flags().nilpotent);
    CHECK(s3->class_flags().p_nilpotent.at(2));       // O_{2'} = C3 has index 2
    CHECK_FALSE(s3->class_flags().p_nilpotent.at(3));

    auto c12 = ctx_of("C12");
    CHECK(c12->class_flags().nilpotent);
    CHECK(c12->class_flags().supersolvable);
}

TEST_CASE("supersolvable iff U-hypercentre is everything; p-supersolvable for all p iff supersolvable") {
    for (const char* name : {"S3", "S4", "A4", "A5", "SL(2,3)", "C12", "D12", "Q8", "C5:C4",
                             "C7:C3", "S3 x S3", "SL(2,5)"}) {
        CAPTURE(name);
        auto ctx = ctx_of(name);
        const GroupClassFlags& f = ctx->class_flags();
        CHECK(f.supersolvable == (f.u_hypercentre.order() == ctx->group.order()));
        bool all_p = true;
        for (int p : ctx->group.primes()) all_p = all_p && f.p_supersolvable.at(p);
        CHECK(all_p == f.supersolvable);
    }
}

TEST_CASE("supersolvable_above tracks quotient supersolvability") {
    auto s4 = ctx_of("S4");
    int v4 = -1, a4 = -1;
    for (int i : s4->normals_in(s4->lat.whole_idx)) {
        if (s4->lat.all[i].order() == 4) v4 = i;
        if (s4->lat.all[i].order() == 12) a4 = i;
    }
    CHECK(supersolvable_above(*s4, v4));   // S4/V4 = S3
    CHECK(supersolvable_above(*s4, a4));   // S4/A4 = C2
    CHECK_FALSE(supersolvable_above(*s4, s4->lat.trivial_idx));

    auto sl25 = ctx_of("SL(2,5)");
    CHECK_FALSE(supersolvable_above(*sl25, sl25->lat.trivial_idx));
    CHECK(supersolvable_above(*sl25, sl25->lat.whole_idx));
}
