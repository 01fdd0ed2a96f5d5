#pragma once

#include <string>
#include <vector>

#include "capfusion/element.hpp"
#include "capfusion/group.hpp"

namespace capf {

// Parsed form of a builtin name or a generator file: a label plus resolved
// concrete generators.
struct GroupSpec {
    std::string name;
    std::vector<Element> generators;
};

// Builtin grammar: C<n>, D<2n>, Q8, S<n> (n<=6), A<n> (n<=6), SL(2,3),
// SL(2,5), GL(2,3), products "X x Y", semidirects "C<p>:C<q>" (q | p-1).
// Throws UsageError on anything else.
GroupSpec parse_builtin(const std::string& text, long order_cap);

// Group definition file: line 1 "name <label>", line 2 "perm <degree>" or
// "matrix <q>", then one generator per line (cycles or "a b c d").
GroupSpec parse_group_file(const std::string& path);

// Accepts either a readable file path or a builtin name.
GroupSpec parse_group_arg(const std::string& arg, long order_cap);

FiniteGroup build_group(const GroupSpec& spec, long order_cap);

std::string builtin_grammar_help();

}  // namespace capf
