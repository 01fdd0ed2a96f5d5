#include "capfusion/builders.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "capfusion/errors.hpp"

namespace capf {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool parse_int_suffix(const std::string& s, size_t from, int& out) {
    if (from >= s.size()) return false;
    for (size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    out = std::stoi(s.substr(from));
    return true;
}

std::vector<Element> cyclic_gens(int n) {
    if (n == 1) return {perm_identity(1)};
    Perm rot(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    return {make_perm(rot)};
}

std::vector<Element> dihedral_gens(int order) {
    if (order % 2 != 0 || order < 4)
        throw UsageError("dihedral D<2n> needs an even order >= 4");
    int n = order / 2;
    if (n == 2) {
        // order 4: the Klein group, on 4 points
        return {parse_cycles("(0 1)", 4), parse_cycles("(2 3)", 4)};
    }
    Perm rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return {make_perm(rot), make_perm(refl)};
}

std::vector<Element> symmetric_gens(int n) {
    if (n <= 1) return {perm_identity(1)};
    if (n == 2) return cyclic_gens(2);
    Perm rot(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    return {parse_cycles("(0 1)", n), make_perm(rot)};
}

std::vector<Element> alternating_gens(int n) {
    if (n <= 2) return {perm_identity(1)};
    if (n == 3) return {parse_cycles("(0 1 2)", 3)};
    Perm cyc(n);
    if (n % 2 == 1) {
        for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    } else {
        cyc[0] = 0;
        for (int i = 1; i < n; ++i) cyc[i] = i % (n - 1) + 1;
    }
    return {parse_cycles("(0 1 2)", n), make_perm(cyc)};
}

std::vector<Element> sl2_gens(int q) {
    return {make_mat({1, 1, 0, 1}, q), make_mat({0, 1, -1, 0}, q)};
}

std::vector<Element> gl23_gens() {
    auto gens = sl2_gens(3);
    gens.push_back(make_mat({2, 0, 0, 1}, 3));
    return gens;
}

std::vector<Element> q8_gens() {
    // i, j inside SL(2,3)
    return {make_mat({0, -1, 1, 0}, 3), make_mat({1, 1, 1, -1}, 3)};
}

int mult_order(int r, int p) {
    int k = 1;
    long cur = r % p;
    while (cur != 1) {
        cur = cur * r % p;
        ++k;
    }
    return k;
}

std::vector<Element> semidirect_gens(int p, int q) {
    if (!is_prime(p)) throw UsageError("C<p>:C<q> needs p prime");
    if (q < 2 || (p - 1) % q != 0) throw UsageError("C<p>:C<q> needs q | p-1");
    int r = 0;
    for (int cand = 2; cand < p; ++cand) {
        if (mult_order(cand, p) == q) {
            r = cand;
            break;
        }
    }
    if (r == 0) throw UsageError("no element of order " + std::to_string(q) + " mod " + std::to_string(p));
    Perm a(p), b(p);
    for (int i = 0; i < p; ++i) {
        a[i] = (i + 1) % p;
        b[i] = static_cast<int>(static_cast<long>(r) * i % p);
    }
    return {make_perm(a), make_perm(b)};
}

// Right-regular permutation generators of an already built group; used to
// turn matrix-carrier factors into permutation factors for direct products.
std::vector<Element> regular_gens(const FiniteGroup& g, const std::vector<Element>& gens) {
    std::vector<Element> out;
    for (const auto& gen : gens) {
        int gi = *g.index_of(gen);
        Perm images(g.order());
        for (int x = 0; x < g.order(); ++x) images[x] = g.mul(x, gi);
        out.push_back(make_perm(std::move(images)));
    }
    return out;
}

std::vector<std::string> split_product(const std::string& text) {
    std::vector<std::string> parts;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (depth == 0 && i + 2 < text.size() && text[i] == ' ' && text[i + 1] == 'x' &&
            text[i + 2] == ' ') {
            parts.push_back(text.substr(start, i - start));
            start = i + 3;
            i += 2;
        }
    }
    parts.push_back(text.substr(start));
    return parts;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<Element> atom_gens(const std::string& name, long order_cap);

// Generators of the direct product on disjoint point sets.
std::vector<Element> product_gens(const std::vector<std::string>& parts, long order_cap) {
    std::vector<std::vector<Element>> factor_gens;
    std::vector<int> degrees;
    for (const auto& part : parts) {
        auto gens = atom_gens(part, order_cap);
        if (!gens[0].is_perm()) {
            FiniteGroup g = FiniteGroup::from_generators(part, gens, order_cap);
            gens = regular_gens(g, gens);
        }
        degrees.push_back(static_cast<int>(gens[0].perm.size()));
        factor_gens.push_back(std::move(gens));
    }
    int total = std::accumulate(degrees.begin(), degrees.end(), 0);
    std::vector<Element> out;
    int offset = 0;
    for (size_t f = 0; f < factor_gens.size(); ++f) {
        for (const auto& gen : factor_gens[f]) {
            Perm images(total);
            for (int i = 0; i < total; ++i) images[i] = i;
            for (int i = 0; i < degrees[f]; ++i) images[offset + i] = offset + gen.perm[i];
            out.push_back(make_perm(std::move(images)));
        }
        offset += degrees[f];
    }
    return out;
}

std::vector<Element> atom_gens(const std::string& raw, [[maybe_unused]] long order_cap) {
    std::string name = trim(raw);
    if (name.empty()) throw UsageError("empty group name");
    int n = 0;
    if (name == "Q8") return q8_gens();
    if (name == "SL(2,3)") return sl2_gens(3);
    if (name == "SL(2,5)") return sl2_gens(5);
    if (name == "GL(2,3)") return gl23_gens();
    size_t colon = name.find(':');
    if (colon != std::string::npos) {
        std::string lhs = name.substr(0, colon), rhs = name.substr(colon + 1);
        int p = 0, q = 0;
        if (lhs.size() < 2 || lhs[0] != 'C' || !parse_int_suffix(lhs, 1, p) || rhs.size() < 2 ||
            rhs[0] != 'C' || !parse_int_suffix(rhs, 1, q))
            throw UsageError("unrecognized semidirect spec: " + name);
        return semidirect_gens(p, q);
    }
    if (name[0] == 'C' && parse_int_suffix(name, 1, n)) {
        if (n < 1) throw UsageError("C<n> needs n >= 1");
        return cyclic_gens(n);
    }
    if (name[0] == 'D' && parse_int_suffix(name, 1, n)) return dihedral_gens(n);
    if (name[0] == 'S' && parse_int_suffix(name, 1, n)) {
        if (n < 1 || n > 6) throw UsageError("S<n> supports n <= 6");
        return symmetric_gens(n);
    }
    if (name[0] == 'A' && parse_int_suffix(name, 1, n)) {
        if (n < 1 || n > 6) throw UsageError("A<n> supports n <= 6");
        return alternating_gens(n);
    }
    throw UsageError("unrecognized group spec: " + name);
}

}  // namespace

GroupSpec parse_builtin(const std::string& text, long order_cap) {
    std::string name = trim(text);
    auto parts = split_product(name);
    GroupSpec spec;
    spec.name = name;
    if (parts.size() == 1) {
        spec.generators = atom_gens(name, order_cap);
    } else {
        for (auto& p : parts) p = trim(p);
        spec.generators = product_gens(parts, order_cap);
    }
    return spec;
}

GroupSpec parse_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open group file: " + path);
    std::string line;
    GroupSpec spec;
    int degree = -1, q = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream is(line);
        if (spec.name.empty()) {
            std::string kw;
            is >> kw;
            if (kw != "name") throw UsageError("group file must start with 'name <label>'");
            is >> spec.name;
            if (spec.name.empty()) throw UsageError("missing group label");
            continue;
        }
        if (degree < 0 && q < 0) {
            std::string kw;
            int v;
            is >> kw >> v;
            if (kw == "perm" && v >= 1)
                degree = v;
            else if (kw == "matrix" && v >= 2)
                q = v;
            else
                throw UsageError("group file line 2 must be 'perm <degree>' or 'matrix <q>'");
            continue;
        }
        if (degree >= 0) {
            spec.generators.push_back(parse_cycles(line, degree));
        } else {
            std::array<int, 4> m{};
            std::istringstream ms(line);
            if (!(ms >> m[0] >> m[1] >> m[2] >> m[3]))
                throw UsageError("matrix generator line " + std::to_string(lineno) +
                                 " must hold 4 integers");
            spec.generators.push_back(make_mat(m, q));
        }
    }
    if (spec.generators.empty()) throw UsageError("group file has no generators");
    return spec;
}

GroupSpec parse_group_arg(const std::string& arg, long order_cap) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return parse_group_file(arg);
    return parse_builtin(arg, order_cap);
}

FiniteGroup build_group(const GroupSpec& spec, long order_cap) {
    return FiniteGroup::from_generators(spec.name, spec.generators, order_cap);
}

std::string builtin_grammar_help() {
    return "builtin group specs:\n"
           "  C<n>        cyclic group of order n\n"
           "  D<2n>       dihedral group of order 2n\n"
           "  Q8          quaternion group\n"
           "  S<n>        symmetric group, n <= 6\n"
           "  A<n>        alternating group, n <= 6\n"
           "  SL(2,3) SL(2,5) GL(2,3)\n"
           "  C<p>:C<q>   semidirect product, p prime, q | p-1, faithful action\n"
           "  X x Y       direct product of specs (left-associative)\n";
}

}  // namespace capf
