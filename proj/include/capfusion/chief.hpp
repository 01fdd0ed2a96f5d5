#pragma once

#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "capfusion/config.hpp"
#include "capfusion/lattice.hpp"

namespace capf {

// Chief factor of an ambient member: lower/upper are lattice indices of
// subgroups normal in the ambient with nothing normal-in-ambient strictly
// between.
struct ChiefFactor {
    int lower = -1;
    int upper = -1;
    int order = 0;  // |upper| / |lower|
};

struct ChiefSeries {
    std::vector<int> chain;  // lattice indices, trivial .. ambient
    std::vector<ChiefFactor> factors;
};

struct GroupClassFlags {
    std::map<int, bool> p_solvable;
    std::map<int, bool> p_supersolvable;
    std::map<int, bool> p_nilpotent;
    bool solvable = false;
    bool supersolvable = false;
    bool nilpotent = false;
    Subgroup u_hypercentre;
};

// Per-group mutable caches layered over an immutable lattice. One owner at
// a time (verify workers each own their context).
struct GroupCtx {
    FiniteGroup group;
    SubgroupLattice lat;
    Config cfg;

    GroupCtx(FiniteGroup g, const Config& c);
    GroupCtx(const GroupCtx&) = delete;
    GroupCtx& operator=(const GroupCtx&) = delete;

    const std::vector<int>& normals_in(int ambient_idx);
    // Cover relation of the normal-in-ambient poset: succ lists hold lattice
    // indices and are indexed in parallel with normals_in(ambient).
    const std::vector<std::vector<int>>& poset_succ(int ambient_idx);
    const std::vector<ChiefFactor>& chief_factors(int ambient_idx);
    const GroupClassFlags& class_flags();
    int sylow(int p);  // canonical Sylow lattice index

    // cap verdict memo: key (variant, p, subject, ambient)
    struct CapVerdict {
        bool holds = false;
        int witness_over = -1, witness_lower = -1, witness_upper = -1;
        std::vector<int> witness_series;
    };
    std::map<std::tuple<int, int, int, int>, CapVerdict> cap_memo;
    // fusion caches, keyed by p
    std::map<int, std::vector<int>> strongly_closed_cache;
    std::map<int, std::pair<bool, std::vector<int>>> fusion_ss_cache;

private:
    std::map<int, std::vector<int>> normals_in_;
    std::map<int, std::vector<std::vector<int>>> succ_;
    std::map<int, std::vector<ChiefFactor>> factors_;
    std::optional<GroupClassFlags> flags_;
    std::map<int, int> sylow_;
};

std::unique_ptr<GroupCtx> make_ctx(FiniteGroup g, const Config& cfg = Config());

// All chief factors of the whole group.
std::vector<ChiefFactor> all_chief_factors(GroupCtx& ctx);

// All chief series of the whole group; throws SeriesExplosion past
// cfg.series_cap.
std::vector<ChiefSeries> all_chief_series(GroupCtx& ctx);

bool is_pd_factor(const ChiefFactor& f, int p);

// True iff the factor is U-central: order is prime.
bool is_u_central(const ChiefFactor& f);

// Largest normal subgroup all of whose chief factors below are of prime
// order, by iterated absorption of prime-order minimal normal subgroups.
Subgroup u_hypercentre(GroupCtx& ctx);

GroupClassFlags classify(GroupCtx& ctx);

// True iff all chief factors of G above the (normal) lattice member are of
// prime order, i.e. G/that member is supersolvable.
bool supersolvable_above(GroupCtx& ctx, int normal_idx);

}  // namespace capf
