#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "capfusion/element.hpp"

namespace capf {

// Fixed-size bitset over element indices of one group.
struct Bitset {
    std::vector<std::uint64_t> w;
    int n = 0;

    Bitset() = default;
    explicit Bitset(int size) : w((size + 63) / 64, 0), n(size) {}
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    int count() const;
    bool subset_of(const Bitset& o) const;  // this ⊆ o
    bool operator==(const Bitset& o) const { return w == o.w; }
    Bitset operator&(const Bitset& o) const;
};

// Element-indexed finite group with full multiplication table.
// Index 0 is always the identity; indices are assigned in BFS discovery
// order over the generators, so they are deterministic per generator list.
class FiniteGroup {
public:
    static constexpr int kIdentity = 0;

    // Enumerates the closure of `gens` (all same carrier). Throws
    // ClosureExceedsCap / InvalidGenerator.
    static FiniteGroup from_generators(std::string name, std::vector<Element> gens,
                                       long order_cap);
    // Assembles a group from a precomputed element list whose index-0 entry
    // is the identity. Used for quotients and automorphism images.
    static FiniteGroup from_elements(std::string name, std::vector<Element> elements);

    int order() const { return static_cast<int>(elements_.size()); }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order() + b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int a, int g) const { return mul(mul(inv(g), a), g); }  // a^g
    int comm(int a, int b) const;                                    // [a,b] = a^-1 b^-1 a b
    int power(int a, long k) const;
    int element_order(int a) const;
    const Element& element(int i) const { return elements_[i]; }
    std::optional<int> index_of(const Element& e) const;

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    std::vector<int> primes() const;  // π(G), ascending

    FiniteGroup() = default;  // empty shell, filled by the factories

private:
    std::string name_;
    std::vector<Element> elements_;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::map<Element, int> index_;

    void build_tables();
};

// A subset of a parent group's element indices, closed under the operation.
// Members are sorted ascending; the mask mirrors them.
struct Subgroup {
    const FiniteGroup* g = nullptr;
    std::vector<int> members;
    Bitset mask;

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int i) const { return mask.test(i); }
    bool contains(const Subgroup& o) const { return o.mask.subset_of(mask); }
    bool operator==(const Subgroup& o) const { return g == o.g && members == o.members; }
};

Subgroup subgroup_from_members(const FiniteGroup& g, std::vector<int> members);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);
Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens);
Subgroup conjugate_subgroup(const Subgroup& h, int x);
Subgroup normalizer(const Subgroup& h);                        // N_G(h)
Subgroup normalizer_in(const Subgroup& h, const Subgroup& a);  // N_a(h)
Subgroup centralizer(const Subgroup& h);                       // C_G(h)
Subgroup centralizer_in(const Subgroup& h, const Subgroup& a); // C_a(h)
Subgroup center(const FiniteGroup& g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);  // <a ∪ b>
Subgroup commutator_subgroup(const Subgroup& a);      // [a,a]

// Product set a·b as a mask over the parent group (not a subgroup in general).
Bitset product_set(const Subgroup& a, const Subgroup& b);

bool is_normal_in(const Subgroup& h, const Subgroup& ambient);
bool is_abelian(const Subgroup& s);
bool is_cyclic(const Subgroup& s);
bool exponent_at_most(const Subgroup& s, int k);

// G/N with coset multiplication. Cosets are indexed by ascending minimal
// member, so the identity coset is index 0. The quotient group's carrier is
// the right-regular permutation action on cosets.
struct QuotientGroup {
    const FiniteGroup* base = nullptr;
    Subgroup kernel;
    std::vector<int> coset_of;           // base index -> coset index
    std::vector<std::vector<int>> lift;  // coset index -> base indices
    FiniteGroup group;                   // the quotient as a group

    Subgroup image(const Subgroup& s) const;  // s·N/N
};
QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n);  // throws NotNormal

// A subgroup re-indexed as a standalone group (identity at 0, original
// carriers kept).
struct MaterializedSubgroup {
    FiniteGroup group;
    std::vector<int> to_parent;    // new index -> parent index
    std::vector<int> from_parent;  // parent index -> new index, -1 outside
    Subgroup image(const Subgroup& s) const;  // s must be ⊆ the source subgroup
};
MaterializedSubgroup materialize(const Subgroup& h);

}  // namespace capf
