// SPDX-License-Identifier: Apache-2.0
//
// Finite permutation groups, generated by explicit permutations.  The
// product gh always means "apply g first, then h", matching the way digit
// maps compose along a digit string.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "autoseq/automaton.hpp"
#include "autoseq/error.hpp"
#include "autoseq/permutation.hpp"

namespace autoseq {

class PermGroup {
public:
    // Breadth-first closure from the identity; elements[0] is the identity
    // and elements are otherwise in discovery order, which is deterministic
    // in the generator list.
    static PermGroup generate(const std::vector<Permutation>& gens,
                              std::size_t max_elements = 1u << 20) {
        if (gens.empty()) throw Error("groups", "need at least one generator");
        int degree = gens[0].degree();
        for (const auto& g : gens)
            if (g.degree() != degree) throw Error("groups", "generator degrees differ");
        PermGroup G;
        G.degree_ = degree;
        G.gen_elements_.clear();
        G.elements_.push_back(identity_perm(degree));
        G.index_.emplace(G.elements_[0].img, 0);
        for (std::size_t k = 0; k < G.elements_.size(); ++k) {
            for (const auto& g : gens) {
                Permutation h = compose(G.elements_[k], g);
                auto it = G.index_.emplace(h.img, static_cast<int>(G.elements_.size()));
                if (it.second) {
                    G.elements_.push_back(h);
                    if (G.elements_.size() > max_elements)
                        throw SizeError("groups", "group closure exceeds element bound");
                }
            }
        }
        for (const auto& g : gens) G.gen_elements_.push_back(G.index_.at(g.img));
        return G;
    }

    int degree() const { return degree_; }
    int order() const { return static_cast<int>(elements_.size()); }

    const Permutation& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& generators() const { return gen_elements_; }

    int element_index(const Permutation& g) const {
        auto it = index_.find(g.img);
        if (it == index_.end()) throw Error("groups", "permutation is not a group element");
        return it->second;
    }

    bool contains(const Permutation& g) const { return index_.count(g.img) != 0; }

    // index of elements_[g] * elements_[h]  (g first, then h)
    int mul(int g, int h) const {
        return element_index(compose(element(g), element(h)));
    }

    int inv(int g) const { return element_index(inverse(element(g))); }

    bool is_abelian() const {
        for (int a : gen_elements_)
            for (int b : gen_elements_)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    bool is_transitive() const {
        std::vector<char> seen(static_cast<std::size_t>(degree_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int gi : gen_elements_) {
                int y = element(gi)(x);
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    ++count;
                    stack.push_back(y);
                }
            }
        }
        return count == degree_;
    }

private:
    int degree_ = 0;
    std::vector<Permutation> elements_;
    std::vector<int> gen_elements_;
    std::map<std::vector<int>, int> index_;
};

// Smallest subgroup containing the given element indices; sorted.
inline std::vector<int> subgroup_closure(const PermGroup& G, const std::vector<int>& seed) {
    std::set<int> in(seed.begin(), seed.end());
    in.insert(0);
    for (;;) {
        std::set<int> add;
        for (int a : in) {
            int ia = G.inv(a);
            if (!in.count(ia)) add.insert(ia);
            for (int b : in) {
                int c = G.mul(a, b);
                if (!in.count(c)) add.insert(c);
            }
        }
        if (add.empty()) break;
        in.insert(add.begin(), add.end());
    }
    return {in.begin(), in.end()};
}

inline bool is_subgroup(const PermGroup& G, const std::vector<int>& H) {
    std::set<int> in(H.begin(), H.end());
    if (!in.count(0)) return false;
    for (int a : H)
        for (int b : H)
            if (!in.count(G.mul(a, b))) return false;
    for (int a : H)
        if (!in.count(G.inv(a))) return false;
    return true;
}

inline bool is_normal_subgroup(const PermGroup& G, const std::vector<int>& H) {
    std::set<int> in(H.begin(), H.end());
    for (int g = 0; g < G.order(); ++g)
        for (int h : H)
            if (!in.count(G.mul(G.mul(G.inv(g), h), g))) return false;
    return true;
}

// x H x^-1 as a sorted index set.
inline std::vector<int> conjugate_subgroup(const PermGroup& G, int x, const std::vector<int>& H) {
    std::set<int> out;
    for (int h : H) out.insert(G.mul(G.mul(G.inv(x), h), x));
    return {out.begin(), out.end()};
}

// Largest normal subgroup of G contained in H: the intersection of all
// conjugates of H.
inline std::vector<int> subgroup_core(const PermGroup& G, const std::vector<int>& H) {
    std::set<int> core(H.begin(), H.end());
    for (int x = 0; x < G.order(); ++x) {
        auto conj = conjugate_subgroup(G, x, H);
        std::set<int> keep;
        for (int h : conj)
            if (core.count(h)) keep.insert(h);
        core = std::move(keep);
    }
    return {core.begin(), core.end()};
}

// Left cosets gH; each coset is sorted, cosets ordered by smallest member.
inline std::vector<std::vector<int>> left_cosets(const PermGroup& G, const std::vector<int>& H) {
    std::vector<std::vector<int>> cosets;
    std::vector<char> placed(static_cast<std::size_t>(G.order()), 0);
    for (int g = 0; g < G.order(); ++g) {
        if (placed[static_cast<std::size_t>(g)]) continue;
        std::set<int> coset;
        for (int h : H) coset.insert(G.mul(g, h));
        for (int x : coset) placed[static_cast<std::size_t>(x)] = 1;
        cosets.emplace_back(coset.begin(), coset.end());
    }
    return cosets;
}

// Greedy generating subset of the subgroup's element list.
inline std::vector<int> generating_subset(const PermGroup& G, const std::vector<int>& H) {
    std::vector<int> gens;
    std::set<int> have{0};
    for (int h : H) {
        if (have.count(h)) continue;
        gens.push_back(h);
        auto closure = subgroup_closure(G, gens);
        have = std::set<int>(closure.begin(), closure.end());
    }
    return gens;
}

// Schreier-style automaton of a point action: states are the points, the
// digit maps are the generating permutations, labels come from tau.
inline Automaton schreier_automaton(const std::vector<Permutation>& digit_maps, int initial_point,
                                    const std::vector<std::string>& tau) {
    if (digit_maps.size() < 2) throw Error("groups", "need one permutation per digit, p >= 2");
    int degree = digit_maps[0].degree();
    if (static_cast<int>(tau.size()) != degree)
        throw Error("groups", "label list size differs from degree");
    if (initial_point < 0 || initial_point >= degree)
        throw Error("groups", "initial point out of range");
    Automaton a;
    a.p = static_cast<int>(digit_maps.size());
    for (const auto& t : tau)
        if (a.symbol_index(t) < 0) a.alphabet.push_back(t);
    for (int x = 0; x < degree; ++x) {
        a.state_names.push_back("q" + std::to_string(x + 1));
        a.labels.push_back(a.symbol_index(tau[static_cast<std::size_t>(x)]));
        std::vector<int> row;
        for (const auto& g : digit_maps) row.push_back(g(x));
        a.delta.push_back(row);
    }
    a.initial = initial_point;
    validate(a);
    return a;
}

// Automaton on the elements of G with digit maps g -> g*t_i and labels the
// left cosets gK, named after their smallest element index.  K must be a
// subgroup; the number of digit maps is the base p.
inline Automaton cayley_automaton(const PermGroup& G, const std::vector<int>& digit_gens,
                                  const std::vector<int>& K) {
    if (digit_gens.size() < 2) throw Error("groups", "need one group element per digit, p >= 2");
    if (!is_subgroup(G, K)) throw Error("groups", "K is not a subgroup");
    std::vector<int> coset_of(static_cast<std::size_t>(G.order()), -1);
    auto cosets = left_cosets(G, K);
    for (std::size_t c = 0; c < cosets.size(); ++c)
        for (int g : cosets[c]) coset_of[static_cast<std::size_t>(g)] = static_cast<int>(c);

    Automaton a;
    a.p = static_cast<int>(digit_gens.size());
    for (const auto& coset : cosets)
        a.alphabet.push_back("g" + std::to_string(coset[0]) + "K");
    for (int g = 0; g < G.order(); ++g) {
        a.state_names.push_back("g" + std::to_string(g));
        a.labels.push_back(coset_of[static_cast<std::size_t>(g)]);
        std::vector<int> row;
        for (int t : digit_gens) row.push_back(G.mul(g, t));
        a.delta.push_back(row);
    }
    a.initial = 0;
    validate(a);
    return a;
}

} // namespace autoseq
