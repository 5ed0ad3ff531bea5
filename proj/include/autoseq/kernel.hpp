// SPDX-License-Identifier: Apache-2.0
//
// The kernel graph of an automatic sequence: vertices are the distinct
// subsequences n -> a(p^i n + j), edges are the digit maps t_d sending a
// subsequence u to (u_{pn+d})_n.  Vertices are classes of states under
// exact sequence equality, so everything here is computed without sampling.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "autoseq/automaton.hpp"
#include "autoseq/equivalence.hpp"
#include "autoseq/error.hpp"
#include "autoseq/numeration.hpp"

namespace autoseq {

enum class VertexOrder { bfs, labels };

struct KernelGraph {
    int p = 0;
    std::vector<std::string> alphabet;         // copied from the source automaton
    std::vector<std::vector<int>> gen;         // gen[d][v] = t_d(v)
    std::vector<std::vector<int>> first_terms; // [v][s-1] = alphabet index of term s of v
    int base = -1;                             // vertex of the sequence itself
    std::vector<int> class_of;                 // source state -> vertex, -1 if unreachable
    std::vector<std::vector<int>> members;     // vertex -> source states, ascending

    int num_vertices() const { return static_cast<int>(members.size()); }

    int apply(int v, Digit d) const {
        return gen[static_cast<std::size_t>(d)][static_cast<std::size_t>(v)];
    }

    int apply_path(int v, const std::vector<Digit>& path) const {
        for (Digit d : path) v = apply(v, d);
        return v;
    }
};

// Sequence-equality classes over the states reachable from the initial
// state.  Classes are numbered by their smallest member.
inline std::vector<int> kernel_partition(const Automaton& a) {
    validate(a);
    std::vector<int> cls = sequence_classes(a);
    std::vector<char> reach(static_cast<std::size_t>(a.num_states()), 0);
    for (int q : reachable_states(a, a.initial)) reach[static_cast<std::size_t>(q)] = 1;
    std::vector<int> out(static_cast<std::size_t>(a.num_states()), -1);
    std::vector<int> remap(cls.size(), -1);
    int fresh = 0;
    for (int q = 0; q < a.num_states(); ++q) {
        if (!reach[static_cast<std::size_t>(q)]) continue;
        int c = cls[static_cast<std::size_t>(q)];
        if (remap[static_cast<std::size_t>(c)] < 0) remap[static_cast<std::size_t>(c)] = fresh++;
        out[static_cast<std::size_t>(q)] = remap[static_cast<std::size_t>(c)];
    }
    return out;
}

inline KernelGraph build_kernel_graph(const Automaton& a,
                                      VertexOrder order = VertexOrder::bfs) {
    validate(a);
    std::vector<int> part = kernel_partition(a);
    int nclasses = 1 + *std::max_element(part.begin(), part.end());

    // representative state per class, the class of a state's d-successor is
    // independent of the representative because equal sequences have equal
    // subsequences; checked below
    std::vector<int> rep(static_cast<std::size_t>(nclasses), -1);
    for (int q = 0; q < a.num_states(); ++q) {
        int c = part[static_cast<std::size_t>(q)];
        if (c >= 0 && rep[static_cast<std::size_t>(c)] < 0) rep[static_cast<std::size_t>(c)] = q;
    }
    for (int q = 0; q < a.num_states(); ++q) {
        int c = part[static_cast<std::size_t>(q)];
        if (c < 0) continue;
        for (int d = 0; d < a.p; ++d)
            if (part[static_cast<std::size_t>(step(a, q, d))] !=
                part[static_cast<std::size_t>(step(a, rep[static_cast<std::size_t>(c)], d))])
                throw Error("kernel", "class map is not well defined; refinement is broken");
    }

    // order vertices: breadth first from the base class exploring digits in
    // ascending order, or by smallest member state
    int base_class = part[static_cast<std::size_t>(a.initial)];
    std::vector<int> pos(static_cast<std::size_t>(nclasses), -1);
    std::vector<int> vertex_class;
    if (order == VertexOrder::bfs) {
        pos[static_cast<std::size_t>(base_class)] = 0;
        vertex_class.push_back(base_class);
        for (std::size_t k = 0; k < vertex_class.size(); ++k)
            for (int d = 0; d < a.p; ++d) {
                int c = part[static_cast<std::size_t>(
                    step(a, rep[static_cast<std::size_t>(vertex_class[k])], d))];
                if (pos[static_cast<std::size_t>(c)] < 0) {
                    pos[static_cast<std::size_t>(c)] = static_cast<int>(vertex_class.size());
                    vertex_class.push_back(c);
                }
            }
    } else {
        // classes are already numbered by smallest member state
        for (int c = 0; c < nclasses; ++c) {
            pos[static_cast<std::size_t>(c)] = c;
            vertex_class.push_back(c);
        }
    }
    if (static_cast<int>(vertex_class.size()) != nclasses)
        throw Error("kernel", "kernel graph is not connected from the base");

    KernelGraph g;
    g.p = a.p;
    g.alphabet = a.alphabet;
    g.base = pos[static_cast<std::size_t>(base_class)];
    g.members.resize(static_cast<std::size_t>(nclasses));
    g.class_of.assign(static_cast<std::size_t>(a.num_states()), -1);
    for (int q = 0; q < a.num_states(); ++q) {
        int c = part[static_cast<std::size_t>(q)];
        if (c < 0) continue;
        g.class_of[static_cast<std::size_t>(q)] = pos[static_cast<std::size_t>(c)];
        g.members[static_cast<std::size_t>(pos[static_cast<std::size_t>(c)])].push_back(q);
    }
    g.gen.assign(static_cast<std::size_t>(a.p), std::vector<int>(static_cast<std::size_t>(nclasses)));
    g.first_terms.assign(static_cast<std::size_t>(nclasses),
                         std::vector<int>(static_cast<std::size_t>(a.p - 1)));
    for (int v = 0; v < nclasses; ++v) {
        int q = rep[static_cast<std::size_t>(vertex_class[static_cast<std::size_t>(v)])];
        for (int d = 0; d < a.p; ++d)
            g.gen[static_cast<std::size_t>(d)][static_cast<std::size_t>(v)] =
                g.class_of[static_cast<std::size_t>(step(a, q, d))];
        for (int s = 1; s < a.p; ++s)
            g.first_terms[static_cast<std::size_t>(v)][static_cast<std::size_t>(s - 1)] =
                a.labels[static_cast<std::size_t>(step(a, q, s))];
    }
    return g;
}

// Vertex of the subsequence (i, j) of the base: follow the digits of j.
inline int kernel_vertex(const KernelGraph& g, const AffineCode& code) {
    if (code.base() != g.p) throw Error("kernel", "code base differs from graph base");
    return g.apply_path(g.base, code.path());
}

// ---------------------------------------------------------------------------
// Transformation monoid generated by the digit maps.

struct TransformationMonoid {
    std::vector<std::vector<int>> elements; // vertex maps; elements[0] = identity
    std::vector<int> generator_index;       // per digit
    bool is_group = false;

    int order() const { return static_cast<int>(elements.size()); }
};

inline TransformationMonoid monoid_closure(const KernelGraph& g,
                                           std::size_t max_elements = 1u << 20) {
    int n = g.num_vertices();
    TransformationMonoid m;
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) id[static_cast<std::size_t>(v)] = v;
    std::map<std::vector<int>, int> index;
    m.elements.push_back(id);
    index.emplace(id, 0);
    for (std::size_t k = 0; k < m.elements.size(); ++k) {
        for (int d = 0; d < g.p; ++d) {
            // append digit d: apply the element first, then t_d
            std::vector<int> nxt(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                nxt[static_cast<std::size_t>(v)] =
                    g.apply(m.elements[k][static_cast<std::size_t>(v)], d);
            auto it = index.emplace(nxt, static_cast<int>(m.elements.size()));
            if (it.second) {
                m.elements.push_back(nxt);
                if (m.elements.size() > max_elements)
                    throw SizeError("kernel", "monoid closure exceeds element bound");
            }
        }
    }
    m.generator_index.resize(static_cast<std::size_t>(g.p));
    for (int d = 0; d < g.p; ++d)
        m.generator_index[static_cast<std::size_t>(d)] =
            index.at(g.gen[static_cast<std::size_t>(d)]);
    m.is_group = true;
    for (int d = 0; d < g.p; ++d)
        if (!is_permutation(g.gen[static_cast<std::size_t>(d)])) m.is_group = false;
    return m;
}

// ---------------------------------------------------------------------------
// Relations.  A relation of type r at vertex u is a nonempty digit word w,
// applied least significant digit first, whose last (most significant)
// digit is r and whose map fixes u.  A relation is global when its map is
// the identity on every vertex.

inline std::string path_to_string(const std::vector<Digit>& path) {
    std::string s;
    for (std::size_t k = path.size(); k-- > 0;) s += std::to_string(path[k]);
    return s;
}

// Word in application order (least significant digit first).
inline std::string word_of_path(const std::vector<Digit>& path) {
    std::string s;
    for (Digit d : path) s += std::to_string(d);
    return s;
}

struct GlobalRelations {
    std::vector<char> has_type;            // indexed by type r = 0..p-1
    std::vector<std::vector<Digit>> witness; // identity word per type, application order
    bool all = false;                      // every type has a global relation
};

// A word ending (in application order) with digit r acts as t_r composed
// after the rest, so a global identity of type r exists iff t_r is a
// bijection; the witness is r repeated ord(t_r) times.
inline GlobalRelations global_relations(const KernelGraph& g) {
    GlobalRelations out;
    out.has_type.assign(static_cast<std::size_t>(g.p), 0);
    out.witness.resize(static_cast<std::size_t>(g.p));
    out.all = true;
    int n = g.num_vertices();
    for (int r = 0; r < g.p; ++r) {
        const auto& t = g.gen[static_cast<std::size_t>(r)];
        if (!is_permutation(t)) {
            out.all = false;
            continue;
        }
        // order of the permutation
        std::vector<int> cur = t;
        int ord = 1;
        auto is_id = [n](const std::vector<int>& f) {
            for (int v = 0; v < n; ++v)
                if (f[static_cast<std::size_t>(v)] != v) return false;
            return true;
        };
        while (!is_id(cur)) {
            std::vector<int> nxt(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v)
                nxt[static_cast<std::size_t>(v)] =
                    t[static_cast<std::size_t>(cur[static_cast<std::size_t>(v)])];
            cur = nxt;
            ++ord;
        }
        out.has_type[static_cast<std::size_t>(r)] = 1;
        out.witness[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(ord), r);
    }
    return out;
}

struct RelEqualResult {
    bool equal = true;
    std::vector<Digit> witness; // application order; fixes one side only
};

// Same relation words at u and v: the word languages {w : t_w(u) = u} and
// {w : t_w(v) = v} coincide (the empty word is excluded on both sides, so
// it never separates).  Decided by breadth-first search on vertex pairs.
inline RelEqualResult rel_equal(const KernelGraph& g, int u, int v) {
    int n = g.num_vertices();
    auto pid = [n](int x, int y) { return x * n + y; };
    std::vector<int> parent(static_cast<std::size_t>(n * n), -2);
    std::vector<Digit> via(static_cast<std::size_t>(n * n), -1);
    std::vector<int> queue;
    parent[static_cast<std::size_t>(pid(u, v))] = -1;
    queue.push_back(pid(u, v));
    for (std::size_t k = 0; k < queue.size(); ++k) {
        int x = queue[static_cast<std::size_t>(k)] / n;
        int y = queue[static_cast<std::size_t>(k)] % n;
        for (int d = 0; d < g.p; ++d) {
            int x2 = g.apply(x, d), y2 = g.apply(y, d);
            int id2 = pid(x2, y2);
            if (parent[static_cast<std::size_t>(id2)] != -2) continue;
            parent[static_cast<std::size_t>(id2)] = queue[static_cast<std::size_t>(k)];
            via[static_cast<std::size_t>(id2)] = d;
            if ((x2 == u) != (y2 == v)) {
                RelEqualResult r;
                r.equal = false;
                int cur = id2;
                while (parent[static_cast<std::size_t>(cur)] != -1) {
                    r.witness.push_back(via[static_cast<std::size_t>(cur)]);
                    cur = parent[static_cast<std::size_t>(cur)];
                }
                std::reverse(r.witness.begin(), r.witness.end());
                return r;
            }
            queue.push_back(id2);
        }
    }
    return {};
}

struct MinimalRelation {
    Digit type = -1;
    std::vector<Digit> path; // application order, last digit = type
};

// Shortest relation word of each type at u (ties broken by lexicographic
// order of the application-order word).  Types whose shortest word exceeds
// max_len are omitted.
inline std::vector<MinimalRelation> minimal_relations(const KernelGraph& g, int u,
                                                      int max_len = 64) {
    int n = g.num_vertices();
    // lexicographically least shortest path from u to every vertex
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::vector<Digit> via(static_cast<std::size_t>(n), -1);
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    parent[static_cast<std::size_t>(u)] = -1;
    dist[static_cast<std::size_t>(u)] = 0;
    queue.push_back(u);
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (int d = 0; d < g.p; ++d) {
            int x = g.apply(queue[static_cast<std::size_t>(k)], d);
            if (parent[static_cast<std::size_t>(x)] != -2) continue;
            parent[static_cast<std::size_t>(x)] = queue[static_cast<std::size_t>(k)];
            via[static_cast<std::size_t>(x)] = d;
            dist[static_cast<std::size_t>(x)] =
                dist[static_cast<std::size_t>(queue[static_cast<std::size_t>(k)])] + 1;
            queue.push_back(x);
        }
    auto path_to = [&](int x) {
        std::vector<Digit> p;
        while (parent[static_cast<std::size_t>(x)] != -1) {
            p.push_back(via[static_cast<std::size_t>(x)]);
            int pr = parent[static_cast<std::size_t>(x)];
            x = pr;
        }
        std::reverse(p.begin(), p.end());
        return p;
    };
    std::vector<MinimalRelation> out;
    for (int r = 0; r < g.p; ++r) {
        std::optional<std::vector<Digit>> best;
        for (int x = 0; x < n; ++x) {
            if (dist[static_cast<std::size_t>(x)] < 0) continue;
            if (g.apply(x, r) != u) continue;
            auto w = path_to(x);
            w.push_back(r);
            if (!best || w.size() < best->size() || (w.size() == best->size() && w < *best))
                best = w;
        }
        if (best && static_cast<int>(best->size()) <= max_len) {
            MinimalRelation m;
            m.type = r;
            m.path = *best;
            out.push_back(m);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reproducing the sequence from the graph alone.

struct DerivedLabeling {
    bool consistent = false;
    std::vector<int> labels;   // alphabet index per vertex
    // set on conflict: vertex and two letters forced on it
    int conflict_vertex = -1;
    int conflict_a = -1, conflict_b = -1;
};

// A digit word for n ends with its leading digit s >= 1, so the vertex
// reached by the full word is v = t_s(x) and a_n is term s of x.  The label
// of v must therefore equal first_terms[x][s-1] for every such pair; when
// the constraints agree the graph reproduces the sequence by construction.
// Vertices with no nonzero-digit preimage are never the endpoint of a full
// word; they get their own first term as a neutral choice.
inline DerivedLabeling derived_labeling(const KernelGraph& g) {
    DerivedLabeling out;
    out.labels.assign(static_cast<std::size_t>(g.num_vertices()), -1);
    for (int x = 0; x < g.num_vertices(); ++x)
        for (int s = 1; s < g.p; ++s) {
            int v = g.apply(x, s);
            int letter =
                g.first_terms[static_cast<std::size_t>(x)][static_cast<std::size_t>(s - 1)];
            int& slot = out.labels[static_cast<std::size_t>(v)];
            if (slot < 0) {
                slot = letter;
            } else if (slot != letter) {
                out.conflict_vertex = v;
                out.conflict_a = slot;
                out.conflict_b = letter;
                return out;
            }
        }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (out.labels[static_cast<std::size_t>(v)] < 0)
            out.labels[static_cast<std::size_t>(v)] =
                g.first_terms[static_cast<std::size_t>(v)][0];
    out.consistent = true;
    return out;
}

// The graph as an automaton, using the derived labeling.
inline std::optional<Automaton> derived_automaton(const KernelGraph& g) {
    DerivedLabeling lab = derived_labeling(g);
    if (!lab.consistent) return std::nullopt;
    Automaton a;
    a.p = g.p;
    a.alphabet = g.alphabet;
    for (int v = 0; v < g.num_vertices(); ++v) {
        a.state_names.push_back("v" + std::to_string(v));
        a.labels.push_back(lab.labels[static_cast<std::size_t>(v)]);
        std::vector<int> row;
        for (int d = 0; d < g.p; ++d) row.push_back(g.apply(v, d));
        a.delta.push_back(row);
    }
    a.initial = g.base;
    validate(a);
    return a;
}

// Automaton computing the sequence the graph encodes at its base vertex:
// states remember the vertex reached by all digits but the newest plus that
// newest digit, so the final state knows term d_m of the right subsequence.
// Labels of states whose remembered digit is 0 are never read (words for
// n >= 1 end in a nonzero digit).
inline Automaton graph_sequence_automaton(const KernelGraph& g) {
    Automaton a;
    a.p = g.p;
    a.alphabet = g.alphabet;
    int n = g.num_vertices();
    auto sid = [n](int v, int d) { return 1 + d * n + v; };
    // state 0 is the start (no digit read yet); state 1 + d*n + v remembers
    // (vertex before newest digit, newest digit d)
    a.state_names.push_back("start");
    a.labels.push_back(0);
    a.delta.emplace_back();
    for (int d = 0; d < g.p; ++d)
        for (int v = 0; v < n; ++v) {
            a.state_names.push_back("m" + std::to_string(v) + "_" + std::to_string(d));
            a.labels.push_back(
                d >= 1 ? g.first_terms[static_cast<std::size_t>(v)][static_cast<std::size_t>(d - 1)]
                       : 0);
            a.delta.emplace_back();
        }
    auto& start_row = a.delta[0];
    for (int d = 0; d < g.p; ++d) start_row.push_back(sid(g.base, d));
    for (int d = 0; d < g.p; ++d)
        for (int v = 0; v < n; ++v) {
            auto& row = a.delta[static_cast<std::size_t>(sid(v, d))];
            for (int d2 = 0; d2 < g.p; ++d2) row.push_back(sid(g.apply(v, d), d2));
        }
    a.initial = 0;
    validate(a);
    return a;
}

struct ReproducesResult {
    bool reproduces = false;
    std::optional<BigInt> witness_index; // least differing n when false and a
                                         // derived automaton exists
    bool labeling_conflict = false;
};

// Exact check that the graph, labeled as an automaton, regenerates the
// source sequence, with a bounded prefix comparison kept as a diagnostic.
inline ReproducesResult reproduces(const Automaton& source, const KernelGraph& g,
                                   std::int64_t prefix_cap = 1 << 20) {
    ReproducesResult r;
    auto derived = derived_automaton(g);
    if (!derived) {
        r.labeling_conflict = true;
        return r;
    }
    r.reproduces = sequences_equal(*derived, derived->initial, source, source.initial);
    if (!r.reproduces)
        r.witness_index = distinguishing_index(*derived, derived->initial, source, source.initial);
    // diagnostic prefix scan; p^14 capped
    std::int64_t limit = 1;
    for (int k = 0; k < 14 && limit < prefix_cap; ++k) limit *= g.p;
    if (limit > prefix_cap) limit = prefix_cap;
    for (std::int64_t n = 1; n <= limit; ++n) {
        bool same = derived->alphabet[static_cast<std::size_t>(eval(*derived, n))] ==
                    source.alphabet[static_cast<std::size_t>(eval(source, n))];
        if (!same) {
            if (r.reproduces)
                throw Error("kernel", "prefix scan contradicts exact equivalence");
            break;
        }
    }
    return r;
}

} // namespace autoseq
