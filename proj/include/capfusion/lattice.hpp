#pragma once

#include <map>
#include <string>
#include <vector>

#include "capfusion/config.hpp"
#include "capfusion/group.hpp"

namespace capf {

// The complete subgroup lattice of one group, canonically sorted by
// (order, lexicographic member list). Plain data; all derived caches live
// in GroupCtx so the lattice itself can be shared read-only.
struct SubgroupLattice {
    const FiniteGroup* g = nullptr;
    std::vector<Subgroup> all;
    std::vector<std::vector<int>> gens;  // a small generating set per subgroup
    std::vector<char> normal;            // normal in G
    std::vector<int> order_rank;         // canonical index among subgroups of equal order
    std::vector<Bitset> contains_sub;    // [i]: bitset over subgroup indices contained in all[i]
    int trivial_idx = -1;
    int whole_idx = -1;

    int index_of(const std::vector<int>& members) const;
    int index_of(const Subgroup& s) const { return index_of(s.members); }
    bool contains(int outer, int inner) const { return contains_sub[outer].test(inner); }
    std::vector<int> overgroups_of(int idx) const;   // ascending canonical order, includes idx
    std::vector<int> subgroups_within(int idx) const;  // ascending canonical order
    std::vector<int> of_order(int n) const;
    // "order#rank" address used by CLI flags and report witnesses
    std::string addr(int idx) const;
    int by_addr(int order, int rank) const;  // -1 if absent

private:
    mutable std::map<std::vector<int>, int> by_members_;
    friend SubgroupLattice enumerate_subgroups(const FiniteGroup&, const Config&);
};

// Layer-by-layer cyclic-extension enumeration of every subgroup.
// Throws LatticeExceedsCap when |G| exceeds cfg.lattice_cap.
SubgroupLattice enumerate_subgroups(const FiniteGroup& g, const Config& cfg = Config());

// Deterministic Sylow p-subgroup without a lattice: normalizer extension,
// taking the lexicographically least member set among the candidate
// one-step extensions. Returns the trivial subgroup when p does not divide
// |G|.
Subgroup sylow_subgroup(const FiniteGroup& g, int p);

// Canonical Sylow from a lattice: the first subgroup of order p^a in
// canonical order (lexicographically least member set).
int sylow_index(const SubgroupLattice& lat, int p);

// Maximal members of the proper subgroups of all[idx].
std::vector<int> maximal_subgroups_of(const SubgroupLattice& lat, int idx);

struct CharacteristicSubgroups {
    std::map<int, Subgroup> o_p;        // prime -> O_p(G)
    std::map<int, Subgroup> o_p_prime;  // prime -> O_{p'}(G)
    Subgroup frattini;
    Subgroup fitting;
    Subgroup gen_fitting;
    std::vector<Subgroup> upper_central;  // Z_1 ⊂ Z_2 ⊂ ... (strictly, then stops)
    Subgroup hypercentre_nilpotent;       // Z_inf(G)
    std::vector<Subgroup> components;     // subnormal quasisimple subgroups
};

CharacteristicSubgroups core_subgroups(const SubgroupLattice& lat);

// F(ambient) and F*(ambient) computed inside an ambient member of the
// lattice (every subgroup of the ambient is a lattice member).
Subgroup fitting_within(const SubgroupLattice& lat, int ambient_idx);
Subgroup gen_fitting_within(const SubgroupLattice& lat, int ambient_idx);
std::vector<int> components_within(const SubgroupLattice& lat, int ambient_idx);

bool is_subnormal_in(const SubgroupLattice& lat, int sub_idx, int ambient_idx);

// Normal-in-ambient test by generators (ambient need not be the whole group).
bool normal_in_member(const SubgroupLattice& lat, int sub_idx, int ambient_idx);

}  // namespace capf
