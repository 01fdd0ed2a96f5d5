#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace capf {

// Image vector of a permutation of {0..n-1}. Composition is left-to-right:
// (a*b)[x] = b[a[x]], i.e. permutations act on the right.
using Perm = std::vector<int>;

// Concrete carrier for a group element: either a permutation or a 2x2
// matrix over Z/q (q prime, nonzero determinant). q == 0 marks the
// permutation carrier.
struct Element {
    Perm perm;
    std::array<int, 4> mat{0, 0, 0, 0};  // row-major a b c d
    int q = 0;

    bool is_perm() const { return q == 0; }
    bool is_identity() const;

    auto operator<=>(const Element&) const = default;
    bool operator==(const Element&) const = default;

    std::string str() const;  // cycle notation or "[a b; c d] mod q"
};

Element perm_identity(int degree);
Element mat_identity(int q);
Element make_perm(Perm images);          // validates bijection
Element make_mat(std::array<int, 4> m, int q);  // reduces mod q, validates det

Element mul(const Element& a, const Element& b);
Element inverse(const Element& a);

// Parses cycle notation like "(0 1)(2 3)" or "()" against a fixed degree.
Element parse_cycles(const std::string& text, int degree);
std::string cycles_str(const Perm& p);

}  // namespace capf
