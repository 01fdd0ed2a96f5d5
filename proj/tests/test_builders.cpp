#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "capfusion/builders.hpp"
#include "capfusion/errors.hpp"

using namespace capf;

TEST_CASE("cycle notation round trip") {
    Element e = parse_cycles("(0 1)(2 3)", 5);
    CHECK(e.perm == Perm{1, 0, 3, 2, 4});
    CHECK(cycles_str(e.perm) == "(0 1)(2 3)");
    CHECK(cycles_str(perm_identity(4).perm) == "()");
    CHECK_THROWS_AS(parse_cycles("(0 9)", 4), InvalidGenerator);
    CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)", 4), InvalidGenerator);
}

TEST_CASE("semidirect grammar validation") {
    CHECK_THROWS_AS(parse_builtin("C4:C2", 2000), UsageError);   // p not prime
    CHECK_THROWS_AS(parse_builtin("C5:C3", 2000), UsageError);   // q does not divide p-1
    CHECK(build_group(parse_builtin("C3:C2", 2000), 2000).order() == 6);
    CHECK(build_group(parse_builtin("C11:C5", 2000), 2000).order() == 55);
}

TEST_CASE("unknown specs are usage errors") {
    CHECK_THROWS_AS(parse_builtin("S7", 2000), UsageError);
    CHECK_THROWS_AS(parse_builtin("A9", 2000), UsageError);
    CHECK_THROWS_AS(parse_builtin("SL(2,7)", 2000), UsageError);
    CHECK_THROWS_AS(parse_builtin("", 2000), UsageError);
    CHECK_THROWS_AS(parse_builtin("M11", 2000), UsageError);
}

TEST_CASE("group definition files") {
    const char* path = "test_group_def.grp";
    {
        std::ofstream out(path);
        out << "name klein\n";
        out << "perm 4\n";
        out << "(0 1)\n";
        out << "(2 3)\n";
    }
    GroupSpec spec = parse_group_file(path);
    CHECK(spec.name == "klein");
    FiniteGroup g = build_group(spec, 2000);
    CHECK(g.order() == 4);
    for (int x = 0; x < g.order(); ++x) CHECK(g.element_order(x) <= 2);

    {
        std::ofstream out(path);
        out << "name sl23\n";
        out << "matrix 3\n";
        out << "1 1 0 1\n";
        out << "0 1 -1 0\n";
    }
    CHECK(build_group(parse_group_file(path), 2000).order() == 24);

    {
        std::ofstream out(path);
        out << "perm 4\n";
    }
    CHECK_THROWS_AS(parse_group_file(path), UsageError);
    std::remove(path);
    CHECK_THROWS_AS(parse_group_file("does_not_exist.grp"), UsageError);
}

TEST_CASE("products use disjoint point sets and matrix factors fall back to the regular action") {
    FiniteGroup g = build_group(parse_builtin("Q8 x C3", 2000), 2000);
    CHECK(g.order() == 24);
    // Q8 x C3 has a unique involution
    int involutions = 0;
    for (int x = 0; x < g.order(); ++x)
        if (g.element_order(x) == 2) ++involutions;
    CHECK(involutions == 1);

    FiniteGroup g2 = build_group(parse_builtin("C2 x C2 x C3", 2000), 2000);
    CHECK(g2.order() == 12);
}
