#pragma once

#include <optional>
#include <string>
#include <vector>

#include "capfusion/chief.hpp"

namespace capf {

enum class CapVariant { Cap, PartialCap, PCap, StrongCap, StrongPCap };

std::string variant_name(CapVariant v, int p);

struct CoverAvoidVerdict {
    ChiefFactor factor;
    bool covers = false;
    bool avoids = false;
};

struct CapWitness {
    int overgroup = -1;  // lattice index of the failing ambient
    int lower = -1;      // lattice indices of the failing factor
    int upper = -1;
};

struct CapReport {
    CapVariant variant = CapVariant::Cap;
    int p = 0;
    int subject = -1;  // lattice index
    int ambient = -1;  // lattice index
    bool holds = false;
    std::optional<CapWitness> failure;           // universal variants, on failure
    std::optional<std::vector<int>> series;      // partial CAP, on success
};

// covers ⟺ A·upper = A·lower as product sets (⟺ upper ⊆ A·lower);
// avoids ⟺ A∩upper = A∩lower.
bool covers(const Subgroup& a, const Subgroup& lower, const Subgroup& upper);
bool avoids(const Subgroup& a, const Subgroup& lower, const Subgroup& upper);
// Order-arithmetic route used as the independent cross-check:
// covers ⟺ |upper|·|A∩lower| = |lower|·|A∩upper|.
bool covers_arith(const Subgroup& a, const Subgroup& lower, const Subgroup& upper);
bool avoids_arith(const Subgroup& a, const Subgroup& lower, const Subgroup& upper);

CoverAvoidVerdict cover_avoid(GroupCtx& ctx, int subject_idx, const ChiefFactor& f);

// The five predicates. `ambient_idx` defaults to the whole group; strong
// variants scan every lattice member between subject and ambient.
CapReport is_cap(GroupCtx& ctx, int subject_idx, int ambient_idx = -1);
CapReport is_p_cap(GroupCtx& ctx, int subject_idx, int p, int ambient_idx = -1);
CapReport is_partial_cap(GroupCtx& ctx, int subject_idx, int ambient_idx = -1);
CapReport is_strong_cap(GroupCtx& ctx, int subject_idx, int ambient_idx = -1);
CapReport is_strong_p_cap(GroupCtx& ctx, int subject_idx, int p, int ambient_idx = -1);

CapReport run_variant(GroupCtx& ctx, CapVariant v, int subject_idx, int p, int ambient_idx = -1);

// Lemma-transfer helper: evaluates the variant for A·N/N inside G/N.
// `variant` must be PCap or StrongPCap. The quotient context is built on the
// fly; the returned report's indices refer to the quotient lattice.
struct QuotientTransfer {
    std::unique_ptr<GroupCtx> quotient_ctx;
    std::vector<int> coset_of;           // base index -> quotient index
    std::vector<std::vector<int>> lift;  // quotient index -> base indices
    CapReport report;
};
QuotientTransfer quotient_transfer(GroupCtx& ctx, int subject_idx, int kernel_idx,
                                   CapVariant variant, int p);

}  // namespace capf
