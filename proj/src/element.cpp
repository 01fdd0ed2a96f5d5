#include "capfusion/element.hpp"

#include <algorithm>
#include <sstream>

#include "capfusion/errors.hpp"

namespace capf {

namespace {

int mod(long v, int q) {
    long r = v % q;
    return static_cast<int>(r < 0 ? r + q : r);
}

long modpow(long b, long e, int q) {
    long r = 1;
    b %= q;
    if (b < 0) b += q;
    while (e > 0) {
        if (e & 1) r = r * b % q;
        b = b * b % q;
        e >>= 1;
    }
    return r;
}

}  // namespace

bool Element::is_identity() const {
    if (is_perm()) {
        for (size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != static_cast<int>(i)) return false;
        return true;
    }
    return mat == std::array<int, 4>{1, 0, 0, 1};
}

std::string Element::str() const {
    if (is_perm()) return cycles_str(perm);
    std::ostringstream os;
    os << "[" << mat[0] << " " << mat[1] << "; " << mat[2] << " " << mat[3] << "] mod " << q;
    return os.str();
}

Element perm_identity(int degree) {
    Element e;
    e.perm.resize(degree);
    for (int i = 0; i < degree; ++i) e.perm[i] = i;
    return e;
}

Element mat_identity(int q) {
    Element e;
    e.mat = {1, 0, 0, 1};
    e.q = q;
    return e;
}

Element make_perm(Perm images) {
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
            throw InvalidGenerator("permutation is not a bijection on its point set");
        seen[v] = 1;
    }
    Element e;
    e.perm = std::move(images);
    return e;
}

Element make_mat(std::array<int, 4> m, int q) {
    if (q < 2) throw InvalidGenerator("matrix modulus must be a prime >= 2");
    Element e;
    for (int i = 0; i < 4; ++i) e.mat[i] = mod(m[i], q);
    e.q = q;
    long det = mod(static_cast<long>(e.mat[0]) * e.mat[3] - static_cast<long>(e.mat[1]) * e.mat[2], q);
    if (det == 0) throw InvalidGenerator("matrix is singular mod " + std::to_string(q));
    return e;
}

Element mul(const Element& a, const Element& b) {
    if (a.is_perm() != b.is_perm() || (!a.is_perm() && a.q != b.q))
        throw InvalidGenerator("mixed element carriers");
    Element r;
    if (a.is_perm()) {
        r.perm.resize(a.perm.size());
        for (size_t i = 0; i < a.perm.size(); ++i) r.perm[i] = b.perm[a.perm[i]];
        return r;
    }
    r.q = a.q;
    const auto& x = a.mat;
    const auto& y = b.mat;
    r.mat[0] = mod(static_cast<long>(x[0]) * y[0] + static_cast<long>(x[1]) * y[2], a.q);
    r.mat[1] = mod(static_cast<long>(x[0]) * y[1] + static_cast<long>(x[1]) * y[3], a.q);
    r.mat[2] = mod(static_cast<long>(x[2]) * y[0] + static_cast<long>(x[3]) * y[2], a.q);
    r.mat[3] = mod(static_cast<long>(x[2]) * y[1] + static_cast<long>(x[3]) * y[3], a.q);
    return r;
}

Element inverse(const Element& a) {
    Element r;
    if (a.is_perm()) {
        r.perm.resize(a.perm.size());
        for (size_t i = 0; i < a.perm.size(); ++i) r.perm[a.perm[i]] = static_cast<int>(i);
        return r;
    }
    r.q = a.q;
    long det = mod(static_cast<long>(a.mat[0]) * a.mat[3] - static_cast<long>(a.mat[1]) * a.mat[2], a.q);
    long inv_det = modpow(det, a.q - 2, a.q);  // q prime
    r.mat[0] = mod(a.mat[3] * inv_det, a.q);
    r.mat[1] = mod(-a.mat[1] * inv_det, a.q);
    r.mat[2] = mod(-a.mat[2] * inv_det, a.q);
    r.mat[3] = mod(a.mat[0] * inv_det, a.q);
    return r;
}

Element parse_cycles(const std::string& text, int degree) {
    Perm images(degree);
    for (int i = 0; i < degree; ++i) images[i] = i;
    size_t pos = 0;
    bool any = false;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] != '(') throw InvalidGenerator("expected '(' in cycle notation: " + text);
        size_t close = text.find(')', pos);
        if (close == std::string::npos) throw InvalidGenerator("unbalanced cycle: " + text);
        std::istringstream is(text.substr(pos + 1, close - pos - 1));
        std::vector<int> cyc;
        int v;
        while (is >> v) {
            if (v < 0 || v >= degree)
                throw InvalidGenerator("cycle point " + std::to_string(v) + " out of range 0.." +
                                       std::to_string(degree - 1));
            cyc.push_back(v);
        }
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (images[from] != from) throw InvalidGenerator("point repeated across cycles: " + text);
            images[from] = to;
        }
        any = true;
        pos = close + 1;
    }
    if (!any) throw InvalidGenerator("empty generator line");
    return make_perm(std::move(images));
}

std::string cycles_str(const Perm& p) {
    std::ostringstream os;
    std::vector<char> done(p.size(), 0);
    bool any = false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == static_cast<int>(i)) continue;
        os << "(";
        int cur = static_cast<int>(i);
        bool first = true;
        while (!done[cur]) {
            done[cur] = 1;
            if (!first) os << " ";
            os << cur;
            first = false;
            cur = p[cur];
        }
        os << ")";
        any = true;
    }
    if (!any) return "()";
    return os.str();
}

}  // namespace capf
