#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "capfusion/builders.hpp"
#include "capfusion/errors.hpp"
#include "capfusion/group.hpp"
#include "oracles.hpp"

using namespace capf;

namespace {

FiniteGroup build(const std::string& name) {
    return build_group(parse_builtin(name, 2000), 2000);
}

void check_axioms(const FiniteGroup& g) {
    const int n = g.order();
    // exhaustive for small groups, sampled above 200
    if (n <= 200) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    } else {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int i = 0; i < 20000; ++i) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
        }
    }
    for (int a = 0; a < n; ++a) {
        REQUIRE(g.mul(FiniteGroup::kIdentity, a) == a);
        REQUIRE(g.mul(a, FiniteGroup::kIdentity) == a);
        REQUIRE(g.mul(a, g.inv(a)) == FiniteGroup::kIdentity);
        REQUIRE(g.mul(g.inv(a), a) == FiniteGroup::kIdentity);
    }
}

}  // namespace

TEST_CASE("builtin orders match the standard formulas") {
    // |SL(2,q)| = q(q^2-1); |S_n| = n!; |A_n| = n!/2; |GL(2,3)| = 48
    CHECK(build("SL(2,5)").order() == 5 * 24);
    CHECK(build("SL(2,3)").order() == 3 * 8);
    CHECK(build("GL(2,3)").order() == 48);
    CHECK(build("S4").order() == 24);
    CHECK(build("S5").order() == 120);
    CHECK(build("A4").order() == 12);
    CHECK(build("A5").order() == 60);
    CHECK(build("C1").order() == 1);
    CHECK(build("C12").order() == 12);
    CHECK(build("D8").order() == 8);
    CHECK(build("D4").order() == 4);
    CHECK(build("Q8").order() == 8);
    CHECK(build("C5:C4").order() == 20);
    CHECK(build("C7:C3").order() == 21);
    CHECK(build("Q8 x C3").order() == 24);
    CHECK(build("C2 x C2 x C2").order() == 8);
    CHECK(build("SL(2,3) x C2").order() == 48);
}

TEST_CASE("group axioms hold on the full table") {
    for (const char* name : {"C1", "C6", "S4", "Q8", "D12", "SL(2,3)", "C5:C4", "A5"}) {
        CAPTURE(name);
        check_axioms(build(name));
    }
}

TEST_CASE("element orders") {
    FiniteGroup s4 = build("S4");
    CHECK(s4.element_order(FiniteGroup::kIdentity) == 1);
    int transposition = *s4.index_of(parse_cycles("(0 1)", 4));
    CHECK(s4.element_order(transposition) == 2);

    FiniteGroup sl25 = build("SL(2,5)");
    // oracle: repeated raw multiplication of [[1,1],[0,1]] mod 5
    Element m = make_mat({1, 1, 0, 1}, 5);
    Element cur = m;
    int ord = 1;
    while (!cur.is_identity()) {
        cur = mul(cur, m);
        ++ord;
    }
    CHECK(ord == 5);
    CHECK(sl25.element_order(*sl25.index_of(m)) == 5);
}

TEST_CASE("subgroup_generated basics") {
    FiniteGroup s4 = build("S4");
    CHECK(subgroup_generated(s4, {}).order() == 1);
    std::vector<int> all;
    for (int i = 0; i < s4.order(); ++i) all.push_back(i);
    CHECK(subgroup_generated(s4, all).order() == 24);
    int four_cycle = *s4.index_of(parse_cycles("(0 1 2 3)", 4));
    CHECK(s4.element_order(four_cycle) == 4);
    CHECK(subgroup_generated(s4, {four_cycle}).order() == 4);

    // |<gens>| divides |G| for sampled generating sets
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, s4.order() - 1);
    for (int i = 0; i < 50; ++i) {
        Subgroup h = subgroup_generated(s4, {pick(rng), pick(rng)});
        CHECK(s4.order() % h.order() == 0);
    }
}

TEST_CASE("conjugation") {
    FiniteGroup s4 = build("S4");
    int t01 = *s4.index_of(parse_cycles("(0 1)", 4));
    int t02 = *s4.index_of(parse_cycles("(0 2)", 4));
    int t12 = *s4.index_of(parse_cycles("(1 2)", 4));
    Subgroup h = subgroup_generated(s4, {t01});

    // identity and normal cases
    CHECK(conjugate_subgroup(h, FiniteGroup::kIdentity) == h);
    Subgroup a4 = subgroup_generated(
        s4, {*s4.index_of(parse_cycles("(0 1 2)", 4)), *s4.index_of(parse_cycles("(1 2 3)", 4))});
    for (int x = 0; x < s4.order(); ++x) CHECK(conjugate_subgroup(a4, x) == a4);

    // <(0 1)>^(0 2) = <(1 2)>, computed directly on the permutations
    Subgroup conj = conjugate_subgroup(h, t02);
    CHECK(conj == subgroup_generated(s4, {t12}));

    // (h^x)^y = h^(xy) on sampled pairs
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> pick(0, s4.order() - 1);
    for (int i = 0; i < 60; ++i) {
        int x = pick(rng), y = pick(rng);
        CHECK(conjugate_subgroup(conjugate_subgroup(h, x), y) ==
              conjugate_subgroup(h, s4.mul(x, y)));
    }
}

TEST_CASE("normalizer, centralizer, center") {
    FiniteGroup sl25 = build("SL(2,5)");
    CHECK(center(sl25).order() == 2);

    FiniteGroup s4 = build("S4");
    Subgroup a4 = subgroup_generated(
        s4, {*s4.index_of(parse_cycles("(0 1 2)", 4)), *s4.index_of(parse_cycles("(1 2 3)", 4))});
    CHECK(normalizer(a4).order() == 24);  // normal subgroup
    CHECK(centralizer(whole_group(s4)).order() == center(s4).order());

    for (const char* name : {"S4", "Q8", "D12"}) {
        FiniteGroup g = build(name);
        std::mt19937 rng(5);
        std::uniform_int_distribution<int> pick(0, g.order() - 1);
        for (int i = 0; i < 10; ++i) {
            Subgroup h = subgroup_generated(g, {pick(rng), pick(rng)});
            CHECK(normalizer(h).contains(h));
            // centralizer(h) ∩ h = Z(h)
            Subgroup z_h = centralizer_in(h, h);
            CHECK(intersect(centralizer(h), h) == z_h);
        }
    }
}

TEST_CASE("quotient structure") {
    FiniteGroup sl25 = build("SL(2,5)");
    Subgroup z = center(sl25);
    QuotientGroup q = quotient(sl25, z);
    CHECK(q.group.order() == 60);
    CHECK(q.lift.size() * z.order() == static_cast<size_t>(sl25.order()));

    // projection is a homomorphism; lift is a right inverse of projection
    for (int a = 0; a < sl25.order(); ++a)
        for (int b = 0; b < sl25.order(); b += 7)
            CHECK(q.coset_of[sl25.mul(a, b)] == q.group.mul(q.coset_of[a], q.coset_of[b]));
    for (size_t c = 0; c < q.lift.size(); ++c)
        for (int x : q.lift[c]) CHECK(q.coset_of[x] == static_cast<int>(c));

    FiniteGroup s4 = build("S4");
    CHECK(quotient(s4, trivial_subgroup(s4)).group.order() == 24);
    CHECK(quotient(s4, whole_group(s4)).group.order() == 1);
    Subgroup t = subgroup_generated(s4, {*s4.index_of(parse_cycles("(0 1)", 4))});
    CHECK_THROWS_AS(quotient(s4, t), NotNormal);
}

TEST_CASE("materialize re-indexes a subgroup as a standalone group") {
    FiniteGroup s4 = build("S4");
    Subgroup a4 = subgroup_generated(
        s4, {*s4.index_of(parse_cycles("(0 1 2)", 4)), *s4.index_of(parse_cycles("(1 2 3)", 4))});
    MaterializedSubgroup m = materialize(a4);
    CHECK(m.group.order() == 12);
    check_axioms(m.group);
    for (int i = 0; i < m.group.order(); ++i)
        for (int j = 0; j < m.group.order(); ++j)
            CHECK(m.to_parent[m.group.mul(i, j)] == s4.mul(m.to_parent[i], m.to_parent[j]));
}

TEST_CASE("product sets and commutators") {
    FiniteGroup s4 = build("S4");
    Subgroup a4 = subgroup_generated(
        s4, {*s4.index_of(parse_cycles("(0 1 2)", 4)), *s4.index_of(parse_cycles("(1 2 3)", 4))});
    Subgroup t = subgroup_generated(s4, {*s4.index_of(parse_cycles("(0 1)", 4))});
    CHECK(product_set(t, a4).count() == 24);  // |A·H| = |A||H|/|A∩H|
    CHECK(commutator_subgroup(whole_group(s4)) == a4);
    CHECK(commutator_subgroup(a4).order() == 4);
}

TEST_CASE("invalid generators are rejected") {
    CHECK_THROWS_AS(make_perm({0, 0, 1}), InvalidGenerator);
    CHECK_THROWS_AS(make_mat({1, 1, 1, 1}, 3), InvalidGenerator);
    CHECK_THROWS_AS(build_group(parse_builtin("C30", 2000), 10), ClosureExceedsCap);
}

TEST_CASE("naive closure oracle agrees with the engine") {
    FiniteGroup q8 = build("Q8");
    for (int x = 0; x < q8.order(); ++x)
        CHECK(oracle::close_set(q8, {x}) == subgroup_generated(q8, {x}).members);
}
