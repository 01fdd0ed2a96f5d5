#pragma once

#include <memory>
#include <vector>

#include "capfusion/chief.hpp"

namespace capf {

// Handle on F_S(G): all fusion queries reduce to conjugation in G.
struct FusionSystem {
    GroupCtx* ctx = nullptr;
    int p = 0;
    int sylow_idx = -1;  // lattice index of the canonical Sylow p-subgroup
};

FusionSystem fusion_system(GroupCtx& ctx, int p);

// Element-wise strong closure: for every g in G, q^g ∩ S ⊆ q.
bool is_strongly_closed(const FusionSystem& fs, const Subgroup& q);

// Morphism-level reading, used as the cross-check: for every subgroup
// P ≤ q and every g with P^g ≤ S, P^g ≤ q.
bool is_strongly_closed_morphism(const FusionSystem& fs, int q_idx);

// All strongly F-closed subgroups of S (lattice indices, canonical order).
const std::vector<int>& strongly_closed_subgroups(const FusionSystem& fs);

struct FusionChainResult {
    bool supersolvable = false;
    std::vector<int> chain;     // on success: lattice indices 1 = Q0 < ... < S
    std::vector<int> frontier;  // on failure: maximal reachable strongly closed members
};
FusionChainResult is_supersolvable_fusion(const FusionSystem& fs);

bool is_centric(const FusionSystem& fs, int q_idx);
bool is_fully_normalized(const FusionSystem& fs, int q_idx);

// Aut_F(q) = N_G(q)/C_G(q) realized as permutations of q's member list;
// Out_F(q) = Aut_F(q) modulo the image of q's own conjugation action.
FiniteGroup aut_f(const FusionSystem& fs, int q_idx);
FiniteGroup out_f(const FusionSystem& fs, int q_idx);

// F-essential fully normalized subgroups together with S itself.
std::vector<int> essential_star_set(const FusionSystem& fs);

// N_F(q) realized as the fusion system of N_G(q) over N_S(q).
// Throws NotFullyNormalized if q is not fully normalized.
struct OwnedFusion {
    std::unique_ptr<GroupCtx> ctx;
    int p = 0;
    int sylow_idx = -1;
    FusionSystem view() { return FusionSystem{ctx.get(), p, sylow_idx}; }
};
OwnedFusion normalizer_fusion(const FusionSystem& fs, int q_idx);

// Brute-force strongly p-embedded detection inside a finite group (used on
// Out_F(q)): a proper subgroup H with p | |H| and p ∤ |H ∩ H^x| for all x
// outside H.
bool has_strongly_p_embedded(const FiniteGroup& g, int p, const Config& cfg);

}  // namespace capf
