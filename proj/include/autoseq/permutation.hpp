// SPDX-License-Identifier: Apache-2.0
//
// Permutations of {0,...,n-1} with cycle notation I/O on 1-based points,
// e.g. "(1,5,4,6,2,3)" or "(1,3,4,7)(5,6,8,2)"; "()" is the identity.
#pragma once

#include <string>
#include <vector>

#include "autoseq/error.hpp"

namespace autoseq {

struct Permutation {
    std::vector<int> img; // img[x] = image of point x

    int degree() const { return static_cast<int>(img.size()); }

    int operator()(int x) const { return img[static_cast<std::size_t>(x)]; }

    bool operator==(const Permutation& o) const { return img == o.img; }
    bool operator<(const Permutation& o) const { return img < o.img; }
};

inline Permutation identity_perm(int degree) {
    Permutation p;
    p.img.resize(static_cast<std::size_t>(degree));
    for (int x = 0; x < degree; ++x) p.img[static_cast<std::size_t>(x)] = x;
    return p;
}

inline bool is_permutation(const std::vector<int>& img) {
    std::vector<char> seen(img.size(), 0);
    for (int y : img) {
        if (y < 0 || y >= static_cast<int>(img.size()) || seen[static_cast<std::size_t>(y)])
            return false;
        seen[static_cast<std::size_t>(y)] = 1;
    }
    return true;
}

// gh means "apply g first, then h".
inline Permutation compose(const Permutation& g, const Permutation& h) {
    if (g.degree() != h.degree()) throw Error("groups", "permutation degrees differ");
    Permutation r;
    r.img.resize(g.img.size());
    for (int x = 0; x < g.degree(); ++x)
        r.img[static_cast<std::size_t>(x)] = h(g(x));
    return r;
}

inline Permutation inverse(const Permutation& g) {
    Permutation r;
    r.img.resize(g.img.size());
    for (int x = 0; x < g.degree(); ++x) r.img[static_cast<std::size_t>(g(x))] = x;
    return r;
}

inline int perm_order(const Permutation& g) {
    Permutation a = g;
    const Permutation id = identity_perm(g.degree());
    int k = 1;
    while (!(a == id)) {
        a = compose(a, g);
        ++k;
        if (k > 1 << 20) throw SizeError("groups", "permutation order exceeds bound");
    }
    return k;
}

inline std::string cycle_string(const Permutation& g) {
    std::vector<char> done(g.img.size(), 0);
    std::string out;
    for (int x = 0; x < g.degree(); ++x) {
        if (done[static_cast<std::size_t>(x)] || g(x) == x) continue;
        out += "(";
        int y = x;
        bool first = true;
        while (!done[static_cast<std::size_t>(y)]) {
            done[static_cast<std::size_t>(y)] = 1;
            if (!first) out += ",";
            out += std::to_string(y + 1);
            first = false;
            y = g(y);
        }
        out += ")";
    }
    if (out.empty()) return "()";
    return out;
}

// degree <= 0 means "infer from the largest point mentioned".
inline Permutation parse_cycles(const std::string& text, int degree = 0) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&]() {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    int max_point = 0;
    while (i < text.size()) {
        if (text[i] != '(') throw Error("groups", "expected '(' in cycle notation: " + text);
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == start) throw Error("groups", "expected point number in: " + text);
            int pt = std::stoi(text.substr(start, i - start));
            if (pt < 1) throw Error("groups", "points are 1-based in cycle notation");
            cyc.push_back(pt - 1);
            if (pt > max_point) max_point = pt;
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        if (i >= text.size()) throw Error("groups", "unterminated cycle in: " + text);
        ++i; // ')'
        skip_ws();
        if (!cyc.empty()) cycles.push_back(cyc);
    }
    if (degree <= 0) degree = max_point;
    if (max_point > degree)
        throw Error("groups", "cycle mentions point beyond degree " + std::to_string(degree));
    Permutation p = identity_perm(degree);
    std::vector<char> seen(static_cast<std::size_t>(degree), 0);
    for (const auto& cyc : cycles)
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (seen[static_cast<std::size_t>(from)])
                throw Error("groups", "point repeated in cycle notation: " + text);
            seen[static_cast<std::size_t>(from)] = 1;
            p.img[static_cast<std::size_t>(from)] = to;
        }
    return p;
}

} // namespace autoseq
