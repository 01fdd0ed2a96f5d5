#pragma once

#include <string>
#include <vector>

#include "capfusion/builders.hpp"
#include "capfusion/config.hpp"

namespace capf {

struct Corpus {
    std::vector<GroupSpec> entries;  // buildable within caps, fingerprint-deduplicated
    int max_order = 0;
};

// Builtin families (cyclic, abelian products, dihedral, Q8, symmetric /
// alternating, SL/GL, C_p:C_q semidirects, selected direct products)
// filtered to order <= max_order and deduplicated by fingerprint
// (order, element-order histogram, abelianization order histogram).
Corpus generate_corpus(int max_order, const Config& cfg = Config());

// Fingerprint as a printable key; exposed for the dedup tests.
std::string fingerprint(const FiniteGroup& g);

}  // namespace capf
