#include "capfusion/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "capfusion/errors.hpp"

namespace capf {

int Bitset::count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
}

bool Bitset::subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] & ~o.w[i]) return false;
    return true;
}

Bitset Bitset::operator&(const Bitset& o) const {
    Bitset r(n);
    for (size_t i = 0; i < w.size(); ++i) r.w[i] = w[i] & o.w[i];
    return r;
}

FiniteGroup FiniteGroup::from_generators(std::string name, std::vector<Element> gens,
                                         long order_cap) {
    if (gens.empty()) throw InvalidGenerator("no generators given");
    for (const auto& g : gens) {
        if (g.is_perm() != gens[0].is_perm() || g.q != gens[0].q ||
            (g.is_perm() && g.perm.size() != gens[0].perm.size()))
            throw InvalidGenerator("generators use mixed carriers");
    }
    Element id = gens[0].is_perm() ? perm_identity(static_cast<int>(gens[0].perm.size()))
                                   : mat_identity(gens[0].q);
    FiniteGroup g;
    g.name_ = std::move(name);
    g.elements_.push_back(id);
    g.index_[id] = 0;
    for (size_t i = 0; i < g.elements_.size(); ++i) {
        for (const auto& gen : gens) {
            Element prod = capf::mul(g.elements_[i], gen);
            if (g.index_.emplace(prod, static_cast<int>(g.elements_.size())).second) {
                g.elements_.push_back(std::move(prod));
                if (static_cast<long>(g.elements_.size()) > order_cap)
                    throw ClosureExceedsCap(order_cap);
            }
        }
    }
    g.build_tables();
    return g;
}

FiniteGroup FiniteGroup::from_elements(std::string name, std::vector<Element> elements) {
    FiniteGroup g;
    g.name_ = std::move(name);
    g.elements_ = std::move(elements);
    for (size_t i = 0; i < g.elements_.size(); ++i) g.index_[g.elements_[i]] = static_cast<int>(i);
    if (g.elements_.empty() || !g.elements_[0].is_identity())
        throw InvalidGenerator("element list must start with the identity");
    g.build_tables();
    return g;
}

void FiniteGroup::build_tables() {
    const int n = order();
    mul_.assign(static_cast<size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Element prod = capf::mul(elements_[a], elements_[b]);
            auto it = index_.find(prod);
            if (it == index_.end()) throw InvalidGenerator("element list is not closed");
            mul_[static_cast<size_t>(a) * n + b] = it->second;
        }
    }
    inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (mul(a, b) == kIdentity && mul(b, a) == kIdentity) {
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] < 0) throw InvalidGenerator("element without two-sided inverse");
    }
}

int FiniteGroup::comm(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

int FiniteGroup::power(int a, long k) const {
    int ord = element_order(a);
    k %= ord;
    if (k < 0) k += ord;
    int r = kIdentity;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    int cur = a;
    while (cur != kIdentity) {
        cur = mul(cur, a);
        ++k;
    }
    return k;
}

std::optional<int> FiniteGroup::index_of(const Element& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> FiniteGroup::primes() const {
    std::vector<int> ps;
    int n = order();
    for (int p = 2; p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    return ps;
}

Subgroup subgroup_from_members(const FiniteGroup& g, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup s;
    s.g = &g;
    s.members = std::move(members);
    s.mask = Bitset(g.order());
    for (int m : s.members) s.mask.set(m);
    return s;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
    return subgroup_from_members(g, {FiniteGroup::kIdentity});
}

Subgroup whole_group(const FiniteGroup& g) {
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return subgroup_from_members(g, std::move(all));
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<int> elems{FiniteGroup::kIdentity};
    Bitset seen(g.order());
    seen.set(FiniteGroup::kIdentity);
    for (size_t i = 0; i < elems.size(); ++i) {
        for (int gen : gens) {
            int prod = g.mul(elems[i], gen);
            if (!seen.test(prod)) {
                seen.set(prod);
                elems.push_back(prod);
            }
        }
    }
    return subgroup_from_members(g, std::move(elems));
}

Subgroup conjugate_subgroup(const Subgroup& h, int x) {
    std::vector<int> members;
    members.reserve(h.members.size());
    for (int m : h.members) members.push_back(h.g->conj(m, x));
    return subgroup_from_members(*h.g, std::move(members));
}

Subgroup normalizer_in(const Subgroup& h, const Subgroup& a) {
    std::vector<int> members;
    for (int x : a.members) {
        bool ok = true;
        for (int m : h.members) {
            if (!h.mask.test(h.g->conj(m, x))) {
                ok = false;
                break;
            }
        }
        if (ok) members.push_back(x);
    }
    return subgroup_from_members(*h.g, std::move(members));
}

Subgroup normalizer(const Subgroup& h) { return normalizer_in(h, whole_group(*h.g)); }

Subgroup centralizer_in(const Subgroup& h, const Subgroup& a) {
    std::vector<int> members;
    for (int x : a.members) {
        bool ok = true;
        for (int m : h.members) {
            if (h.g->mul(x, m) != h.g->mul(m, x)) {
                ok = false;
                break;
            }
        }
        if (ok) members.push_back(x);
    }
    return subgroup_from_members(*h.g, std::move(members));
}

Subgroup centralizer(const Subgroup& h) { return centralizer_in(h, whole_group(*h.g)); }

Subgroup center(const FiniteGroup& g) {
    Subgroup all = whole_group(g);
    return centralizer_in(all, all);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    std::vector<int> members;
    for (int m : a.members)
        if (b.mask.test(m)) members.push_back(m);
    return subgroup_from_members(*a.g, std::move(members));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
    std::vector<int> gens = a.members;
    gens.insert(gens.end(), b.members.begin(), b.members.end());
    return subgroup_generated(*a.g, gens);
}

Subgroup commutator_subgroup(const Subgroup& a) {
    std::vector<int> gens;
    for (int x : a.members)
        for (int y : a.members) gens.push_back(a.g->comm(x, y));
    return subgroup_generated(*a.g, gens);
}

Bitset product_set(const Subgroup& a, const Subgroup& b) {
    Bitset r(a.g->order());
    for (int x : a.members)
        for (int y : b.members) r.set(a.g->mul(x, y));
    return r;
}

bool is_normal_in(const Subgroup& h, const Subgroup& ambient) {
    for (int x : ambient.members)
        for (int m : h.members)
            if (!h.mask.test(h.g->conj(m, x))) return false;
    return true;
}

bool is_abelian(const Subgroup& s) {
    for (int x : s.members)
        for (int y : s.members)
            if (s.g->mul(x, y) != s.g->mul(y, x)) return false;
    return true;
}

bool is_cyclic(const Subgroup& s) {
    for (int x : s.members)
        if (s.g->element_order(x) == s.order()) return true;
    return false;
}

bool exponent_at_most(const Subgroup& s, int k) {
    for (int x : s.members)
        if (s.g->element_order(x) > k) return false;
    return true;
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n) {
    if (!is_normal_in(n, whole_group(g))) throw NotNormal();
    QuotientGroup q;
    q.base = &g;
    q.kernel = n;
    q.coset_of.assign(g.order(), -1);
    // Cosets indexed by ascending minimal member; identity coset = N gets 0.
    for (int x = 0; x < g.order(); ++x) {
        if (q.coset_of[x] >= 0) continue;
        int idx = static_cast<int>(q.lift.size());
        std::vector<int> coset;
        for (int m : n.members) coset.push_back(g.mul(x, m));
        std::sort(coset.begin(), coset.end());
        for (int y : coset) q.coset_of[y] = idx;
        q.lift.push_back(std::move(coset));
    }
    const int m = static_cast<int>(q.lift.size());
    // Right-regular action of each coset on coset indices (faithful carrier).
    std::vector<Element> elems;
    elems.reserve(m);
    for (int c = 0; c < m; ++c) {
        Perm images(m);
        int rep = q.lift[c][0];
        for (int d = 0; d < m; ++d) images[d] = q.coset_of[g.mul(q.lift[d][0], rep)];
        Element e;
        e.perm = std::move(images);
        elems.push_back(std::move(e));
    }
    q.group = FiniteGroup::from_elements(g.name() + "/" + std::to_string(n.order()), std::move(elems));
    return q;
}

Subgroup QuotientGroup::image(const Subgroup& s) const {
    std::vector<int> members;
    for (int m : s.members) members.push_back(coset_of[m]);
    return subgroup_from_members(group, std::move(members));
}

MaterializedSubgroup materialize(const Subgroup& h) {
    MaterializedSubgroup m;
    m.to_parent = h.members;  // sorted, identity (index 0) first
    m.from_parent.assign(h.g->order(), -1);
    for (size_t i = 0; i < m.to_parent.size(); ++i) m.from_parent[m.to_parent[i]] = static_cast<int>(i);
    std::vector<Element> elems;
    elems.reserve(h.members.size());
    for (int idx : h.members) elems.push_back(h.g->element(idx));
    m.group = FiniteGroup::from_elements(h.g->name() + "|" + std::to_string(h.order()),
                                         std::move(elems));
    return m;
}

Subgroup MaterializedSubgroup::image(const Subgroup& s) const {
    std::vector<int> members;
    for (int idx : s.members) {
        int mapped = from_parent[idx];
        if (mapped < 0) throw Error("subgroup not contained in the materialized ambient");
        members.push_back(mapped);
    }
    return subgroup_from_members(group, std::move(members));
}

}  // namespace capf
