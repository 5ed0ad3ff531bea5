// SPDX-License-Identifier: Apache-2.0
//
// Classification of a sequence through its kernel graph: global relations,
// group and Cayley structure, homogeneity, self-similarity, and the
// subgroup data attached to labeled Cayley automata.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "autoseq/automaton.hpp"
#include "autoseq/group.hpp"
#include "autoseq/kernel.hpp"

namespace autoseq {

inline bool reaches_all(const KernelGraph& g, int u) {
    std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
    std::vector<int> stack{u};
    seen[static_cast<std::size_t>(u)] = 1;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int d = 0; d < g.p; ++d) {
            int y = g.apply(x, d);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == g.num_vertices();
}

struct SimilarityResult {
    bool similar = false;
    std::vector<int> phi; // full alphabet bijection, source letter -> target letter
    std::string reason;   // set when not similar
};

// Bijection phi of the alphabet with u_n = phi(a_n) for all n, if any.  The
// n-th terms of both sides are first terms of the subsequences reached by
// the digits of n, so the constraints are exactly
//   phi(first_terms[x][s]) = first_terms[y][s]
// over all vertex pairs (x, y) reachable from (base, u) and nonzero digits
// s.  Letters of the source that never occur are mapped to the remaining
// letters in alphabet order.
inline SimilarityResult similarity_bijection(const KernelGraph& g, int u) {
    int nsym = static_cast<int>(g.alphabet.size());
    SimilarityResult out;
    std::vector<int> phi(static_cast<std::size_t>(nsym), -1);
    std::vector<int> used(static_cast<std::size_t>(nsym), -1); // target letter -> source
    int n = g.num_vertices();
    std::vector<char> seen(static_cast<std::size_t>(n * n), 0);
    std::vector<int> queue;
    auto pid = [n](int x, int y) { return x * n + y; };
    seen[static_cast<std::size_t>(pid(g.base, u))] = 1;
    queue.push_back(pid(g.base, u));
    for (std::size_t k = 0; k < queue.size(); ++k) {
        int x = queue[k] / n, y = queue[k] % n;
        for (int s = 1; s < g.p; ++s) {
            int from = g.first_terms[static_cast<std::size_t>(x)][static_cast<std::size_t>(s - 1)];
            int to = g.first_terms[static_cast<std::size_t>(y)][static_cast<std::size_t>(s - 1)];
            if (phi[static_cast<std::size_t>(from)] < 0) {
                if (used[static_cast<std::size_t>(to)] >= 0 &&
                    used[static_cast<std::size_t>(to)] != from) {
                    out.reason = "letters " + g.alphabet[static_cast<std::size_t>(from)] + " and " +
                                 g.alphabet[static_cast<std::size_t>(used[static_cast<std::size_t>(to)])] +
                                 " would both map to " + g.alphabet[static_cast<std::size_t>(to)];
                    return out;
                }
                phi[static_cast<std::size_t>(from)] = to;
                used[static_cast<std::size_t>(to)] = from;
            } else if (phi[static_cast<std::size_t>(from)] != to) {
                out.reason = "letter " + g.alphabet[static_cast<std::size_t>(from)] +
                             " is forced to both " +
                             g.alphabet[static_cast<std::size_t>(phi[static_cast<std::size_t>(from)])] +
                             " and " + g.alphabet[static_cast<std::size_t>(to)];
                return out;
            }
        }
        for (int d = 0; d < g.p; ++d) {
            int id2 = pid(g.apply(x, d), g.apply(y, d));
            if (!seen[static_cast<std::size_t>(id2)]) {
                seen[static_cast<std::size_t>(id2)] = 1;
                queue.push_back(id2);
            }
        }
    }
    // complete the partial injection to a bijection deterministically
    for (int from = 0; from < nsym; ++from) {
        if (phi[static_cast<std::size_t>(from)] >= 0) continue;
        for (int to = 0; to < nsym; ++to)
            if (used[static_cast<std::size_t>(to)] < 0) {
                phi[static_cast<std::size_t>(from)] = to;
                used[static_cast<std::size_t>(to)] = from;
                break;
            }
    }
    out.similar = true;
    out.phi = phi;
    return out;
}

struct Classification {
    int p = 0;
    int num_vertices = 0;
    int monoid_order = 0;
    bool r1 = false;          // global relations of all types
    bool is_group = false;    // the digit maps generate a group
    bool is_cayley = false;   // group and as many vertices as elements
    bool homogeneous = false;
    bool self_similar = false;
    bool reproduces = false;  // the graph, labeled, regenerates the sequence
    GlobalRelations relations;

    // witnesses, set when the corresponding flag is false
    std::optional<int> vertex_missing_base;   // N(u) != N(a): u does not reach base
    std::optional<int> rel_mismatch_vertex;   // rel(u) != rel(a)
    std::vector<Digit> rel_mismatch_word;     // application order
    std::optional<int> dissimilar_vertex;
    std::string dissimilar_reason;
    std::optional<int> conflict_vertex;       // derived labeling conflict
    std::string conflict_letters;
};

inline Classification classify(const KernelGraph& g) {
    Classification c;
    c.p = g.p;
    c.num_vertices = g.num_vertices();
    c.relations = global_relations(g);
    c.r1 = c.relations.all;

    TransformationMonoid m = monoid_closure(g);
    c.monoid_order = m.order();
    c.is_group = m.is_group;
    // every vertex is reachable from the base by construction, so the graph
    // is connected and the Cayley criterion reduces to the counts agreeing
    c.is_cayley = c.is_group && m.order() == g.num_vertices();

    c.homogeneous = true;
    for (int u = 0; u < g.num_vertices() && c.homogeneous; ++u) {
        if (!reaches_all(g, u)) {
            c.homogeneous = false;
            c.vertex_missing_base = u;
            break;
        }
        if (u == g.base) continue;
        RelEqualResult r = rel_equal(g, u, g.base);
        if (!r.equal) {
            c.homogeneous = false;
            c.rel_mismatch_vertex = u;
            c.rel_mismatch_word = r.witness;
        }
    }
    if (g.p == 2) {
        // for base 2, homogeneity is equivalent to the graph being the
        // Cayley graph of its (group) monoid
        bool structural = c.is_group && c.is_cayley;
        if (structural != c.homogeneous)
            throw Error("classify", "homogeneity criteria disagree; this is a bug");
    }

    c.self_similar = true;
    for (int u = 0; u < g.num_vertices() && c.self_similar; ++u) {
        SimilarityResult s = similarity_bijection(g, u);
        if (!s.similar) {
            c.self_similar = false;
            c.dissimilar_vertex = u;
            c.dissimilar_reason = s.reason;
        }
    }

    DerivedLabeling lab = derived_labeling(g);
    c.reproduces = lab.consistent;
    if (!lab.consistent) {
        c.conflict_vertex = lab.conflict_vertex;
        c.conflict_letters = g.alphabet[static_cast<std::size_t>(lab.conflict_a)] + " vs " +
                             g.alphabet[static_cast<std::size_t>(lab.conflict_b)];
    }

    if (c.self_similar && !c.homogeneous)
        throw Error("classify", "self-similar without homogeneous; this is a bug");
    if (c.homogeneous && !c.r1)
        throw Error("classify", "homogeneous without global relations; this is a bug");
    return c;
}

// ---------------------------------------------------------------------------
// Subgroup data of labeled group automata.

// The digit maps of the automaton, required to be permutations of the
// states.
inline std::vector<Permutation> digit_permutations(const Automaton& a) {
    validate(a);
    std::vector<Permutation> maps;
    for (int d = 0; d < a.p; ++d) {
        Permutation g;
        for (int q = 0; q < a.num_states(); ++q) g.img.push_back(step(a, q, d));
        if (!is_permutation(g.img))
            throw Error("classify",
                        "digit " + std::to_string(d) + " does not act as a permutation; "
                        "the underlying graph is not a Schreier graph");
        maps.push_back(g);
    }
    return maps;
}

struct DaggerResult {
    bool holds = false;
    std::optional<std::string> witness; // offending h, cycle notation
};

// Minimality of a Schreier automaton: whenever relabeling the start by h
// leaves every output letter in place, h must fix the start.
inline DaggerResult dagger_check(const Automaton& a) {
    auto maps = digit_permutations(a);
    PermGroup G = PermGroup::generate(maps);
    // the Schreier graph must be connected, i.e. the action transitive on
    // the orbit of every state; we require transitivity on all states
    if (!G.is_transitive())
        throw Error("classify", "the group action is not transitive on the states");
    DaggerResult out;
    out.holds = true;
    int q0 = a.initial;
    for (int h = 0; h < G.order(); ++h) {
        bool same_output = true;
        for (int gidx = 0; gidx < G.order() && same_output; ++gidx) {
            int qg = G.element(gidx)(q0);
            int qhg = G.element(G.mul(h, gidx))(q0);
            if (a.labels[static_cast<std::size_t>(qhg)] != a.labels[static_cast<std::size_t>(qg)])
                same_output = false;
        }
        if (same_output && G.element(h)(q0) != q0) {
            out.holds = false;
            out.witness = cycle_string(G.element(h));
            break;
        }
    }
    return out;
}

struct InvarianceSubgroup {
    std::vector<int> elements; // indices into the group, sorted
    bool normal = false;
};

// H = { h : tau(hg) = tau(g) for all g }, tau given per group element.
inline InvarianceSubgroup invariance_subgroup(const PermGroup& G, const std::vector<int>& tau) {
    if (static_cast<int>(tau.size()) != G.order())
        throw Error("classify", "label list size differs from group order");
    InvarianceSubgroup out;
    for (int h = 0; h < G.order(); ++h) {
        bool ok = true;
        for (int g = 0; g < G.order() && ok; ++g)
            if (tau[static_cast<std::size_t>(G.mul(h, g))] != tau[static_cast<std::size_t>(g)])
                ok = false;
        if (ok) out.elements.push_back(h);
    }
    out.normal = is_normal_subgroup(G, out.elements);
    return out;
}

// Wrapper for automata whose states form a Cayley graph: states are
// identified with group elements through the initial state.
inline InvarianceSubgroup invariance_subgroup(const Automaton& a) {
    auto maps = digit_permutations(a);
    PermGroup G = PermGroup::generate(maps);
    if (G.order() != a.num_states() || !G.is_transitive())
        throw Error("classify",
                    "states cannot be identified with group elements; the graph is not a "
                    "Cayley graph");
    std::vector<int> tau(static_cast<std::size_t>(G.order()));
    for (int g = 0; g < G.order(); ++g)
        tau[static_cast<std::size_t>(g)] =
            a.labels[static_cast<std::size_t>(G.element(g)(a.initial))];
    return invariance_subgroup(G, tau);
}

struct CosetStructure {
    int group_order = 0;
    std::vector<std::string> k_generators; // cycle notation on vertex points
    int k_order = 1;
    bool core_trivial = false;
    bool natural_labeling = false; // every letter fiber is a left coset of K
    std::vector<std::vector<int>> letter_cosets; // letter -> element indices
};

// For a self-similar sequence the letters correspond to left cosets of the
// stabilizer K of the base letter inside G(a); computed on the kernel graph
// with its derived labeling.
inline std::optional<CosetStructure> coset_structure(const KernelGraph& g) {
    TransformationMonoid m = monoid_closure(g);
    if (!m.is_group || m.order() != g.num_vertices()) return std::nullopt;
    DerivedLabeling lab = derived_labeling(g);
    if (!lab.consistent) return std::nullopt;

    std::vector<Permutation> gens;
    for (int d = 0; d < g.p; ++d) {
        Permutation t;
        t.img = g.gen[static_cast<std::size_t>(d)];
        gens.push_back(t);
    }
    PermGroup G = PermGroup::generate(gens);
    if (G.order() != g.num_vertices()) return std::nullopt; // not faithful-compatible

    // identify element h with the vertex base^h
    std::vector<int> vertex_of(static_cast<std::size_t>(G.order()));
    std::vector<int> elem_of(static_cast<std::size_t>(g.num_vertices()), -1);
    for (int h = 0; h < G.order(); ++h) {
        int v = G.element(h)(g.base);
        vertex_of[static_cast<std::size_t>(h)] = v;
        if (elem_of[static_cast<std::size_t>(v)] >= 0) return std::nullopt; // not regular
        elem_of[static_cast<std::size_t>(v)] = h;
    }

    auto letter_of = [&](int h) {
        return lab.labels[static_cast<std::size_t>(vertex_of[static_cast<std::size_t>(h)])];
    };
    int base_letter = letter_of(0);
    std::vector<int> K;
    for (int h = 0; h < G.order(); ++h)
        if (letter_of(h) == base_letter) K.push_back(h);
    if (!is_subgroup(G, K)) return std::nullopt;

    CosetStructure out;
    out.group_order = G.order();
    out.k_order = static_cast<int>(K.size());
    for (int k : generating_subset(G, K)) out.k_generators.push_back(cycle_string(G.element(k)));
    if (out.k_generators.empty()) out.k_generators.push_back("()");
    auto core = subgroup_core(G, K);
    out.core_trivial = core.size() == 1;

    // check that every letter fiber is exactly one left coset of K
    auto cosets = left_cosets(G, K);
    out.letter_cosets.assign(g.alphabet.size(), {});
    for (int h = 0; h < G.order(); ++h)
        out.letter_cosets[static_cast<std::size_t>(letter_of(h))].push_back(h);
    out.natural_labeling = true;
    for (const auto& fiber : out.letter_cosets) {
        if (fiber.empty()) continue;
        bool is_coset = false;
        for (const auto& coset : cosets)
            if (coset == fiber) is_coset = true;
        if (!is_coset) out.natural_labeling = false;
    }
    return out;
}

} // namespace autoseq
