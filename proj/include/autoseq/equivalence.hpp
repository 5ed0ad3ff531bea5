// SPDX-License-Identifier: Apache-2.0
//
// Exact equality of automatic sequences.  Two states generate the same
// sequence iff they agree on every index n >= 1; this is decided by
// partition refinement, never by sampling.  Refinement starts from the
// signature of first terms (labels after one nonzero digit) and closes
// under all digit maps: stable classes with equal signatures evaluate
// equally on every digit string ending in a nonzero digit, by induction
// on its length.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "autoseq/automaton.hpp"

namespace autoseq {

namespace detail {

// Moore refinement over an arbitrary labeled transition table.
// labels[q] must already be comparable across the whole table.
inline std::vector<int> refine(const std::vector<std::vector<int>>& delta,
                               const std::vector<int>& labels, int p) {
    int n = static_cast<int>(delta.size());
    std::vector<int> cls(static_cast<std::size_t>(n));
    int ncls = 0;
    {
        // initial signature: labels of successors under nonzero digits
        std::map<std::vector<int>, int> ids;
        for (int q = 0; q < n; ++q) {
            std::vector<int> sig;
            for (int s = 1; s < p; ++s)
                sig.push_back(labels[static_cast<std::size_t>(
                    delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)])]);
            auto it = ids.emplace(sig, static_cast<int>(ids.size()));
            cls[static_cast<std::size_t>(q)] = it.first->second;
        }
        ncls = static_cast<int>(ids.size());
    }
    for (;;) {
        // each pass refines (the old class id is part of the signature), so
        // an unchanged class count means the partition is stable
        std::map<std::vector<int>, int> ids;
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int q = 0; q < n; ++q) {
            std::vector<int> sig;
            sig.push_back(cls[static_cast<std::size_t>(q)]);
            for (int d = 0; d < p; ++d)
                sig.push_back(cls[static_cast<std::size_t>(
                    delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(d)])]);
            auto it = ids.emplace(sig, static_cast<int>(ids.size()));
            next[static_cast<std::size_t>(q)] = it.first->second;
        }
        if (static_cast<int>(ids.size()) == ncls) break;
        ncls = static_cast<int>(ids.size());
        cls = next;
    }
    // normalize ids by first occurrence
    std::vector<int> remap(cls.size(), -1);
    int fresh = 0;
    for (auto& c : cls) {
        if (remap[static_cast<std::size_t>(c)] < 0) remap[static_cast<std::size_t>(c)] = fresh++;
        c = remap[static_cast<std::size_t>(c)];
    }
    return cls;
}

// Disjoint union of two automata with output symbols merged by name.
struct UnionTable {
    std::vector<std::vector<int>> delta;
    std::vector<int> labels;
    int offset_b = 0; // index of b's state 0
};

inline UnionTable union_table(const Automaton& a, const Automaton& b) {
    if (a.p != b.p) throw Error("core", "cannot compare sequences over different bases");
    UnionTable u;
    u.offset_b = a.num_states();
    std::map<std::string, int> sym;
    auto sym_id = [&sym](const std::string& s) {
        auto it = sym.emplace(s, static_cast<int>(sym.size()));
        return it.first->second;
    };
    for (int q = 0; q < a.num_states(); ++q) {
        u.labels.push_back(sym_id(a.symbol_of(q)));
        std::vector<int> row;
        for (int d = 0; d < a.p; ++d) row.push_back(step(a, q, d));
        u.delta.push_back(row);
    }
    for (int q = 0; q < b.num_states(); ++q) {
        u.labels.push_back(sym_id(b.symbol_of(q)));
        std::vector<int> row;
        for (int d = 0; d < b.p; ++d) row.push_back(u.offset_b + step(b, q, d));
        u.delta.push_back(row);
    }
    return u;
}

} // namespace detail

// Classes of sequence equality over all states of one automaton.
inline std::vector<int> sequence_classes(const Automaton& a) {
    validate(a);
    std::vector<std::vector<int>> delta;
    for (int q = 0; q < a.num_states(); ++q) {
        std::vector<int> row;
        for (int d = 0; d < a.p; ++d) row.push_back(step(a, q, d));
        delta.push_back(row);
    }
    return detail::refine(delta, a.labels, a.p);
}

inline bool sequences_equal(const Automaton& a, int qa, const Automaton& b, int qb) {
    validate(a);
    validate(b);
    auto u = detail::union_table(a, b);
    auto cls = detail::refine(u.delta, u.labels, a.p);
    return cls[static_cast<std::size_t>(qa)] ==
           cls[static_cast<std::size_t>(u.offset_b + qb)];
}

// Least index n >= 1 with a_n != b_n, or nullopt when the sequences are
// equal.  Smaller digit count always means smaller n, so the search first
// finds the minimal length t, then minimizes the digit tuple from the most
// significant position down by dynamic programming over pair states.
inline std::optional<BigInt> distinguishing_index(const Automaton& a, int qa,
                                                  const Automaton& b, int qb) {
    validate(a);
    validate(b);
    auto u = detail::union_table(a, b);
    int p = a.p;
    int n = static_cast<int>(u.delta.size());
    auto pair_id = [n](int x, int y) { return x * n + y; };
    int start = pair_id(qa, u.offset_b + qb);

    auto mismatch = [&u](int pid, int nn) {
        return u.labels[static_cast<std::size_t>(pid / nn)] !=
               u.labels[static_cast<std::size_t>(pid % nn)];
    };
    auto pstep = [&u, &pair_id, n](int pid, int d) {
        int x = pid / n, y = pid % n;
        return pair_id(u.delta[static_cast<std::size_t>(x)][static_cast<std::size_t>(d)],
                       u.delta[static_cast<std::size_t>(y)][static_cast<std::size_t>(d)]);
    };

    // minimal length: layered reachability with a final nonzero digit
    int bound = n * n + 1;
    std::vector<char> layer(static_cast<std::size_t>(n * n), 0);
    layer[static_cast<std::size_t>(start)] = 1;
    int tstar = -1;
    for (int t = 1; t <= bound; ++t) {
        std::vector<char> next(static_cast<std::size_t>(n * n), 0);
        bool hit = false;
        for (int pid = 0; pid < n * n; ++pid) {
            if (!layer[static_cast<std::size_t>(pid)]) continue;
            for (int d = 0; d < p; ++d) {
                int q2 = pstep(pid, d);
                next[static_cast<std::size_t>(q2)] = 1;
                if (d >= 1 && mismatch(q2, n)) hit = true;
            }
        }
        if (hit) {
            tstar = t;
            break;
        }
        layer = next;
    }
    if (tstar < 0) return std::nullopt;

    // feasibility: F[j][P] = digits at positions j..t-1 (applied in that
    // order, last one nonzero) can reach a mismatch from P
    std::vector<std::vector<char>> feas(static_cast<std::size_t>(tstar + 1),
                                        std::vector<char>(static_cast<std::size_t>(n * n), 0));
    for (int pid = 0; pid < n * n; ++pid)
        feas[static_cast<std::size_t>(tstar)][static_cast<std::size_t>(pid)] =
            mismatch(pid, n) ? 1 : 0;
    for (int j = tstar - 1; j >= 0; --j)
        for (int pid = 0; pid < n * n; ++pid)
            for (int d = (j == tstar - 1 ? 1 : 0); d < p && !feas[static_cast<std::size_t>(j)][static_cast<std::size_t>(pid)]; ++d)
                if (feas[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(pstep(pid, d))])
                    feas[static_cast<std::size_t>(j)][static_cast<std::size_t>(pid)] = 1;

    // V[j][P]: minimal digit tuple (positions t-1 down to j) from P, stored
    // most significant first; value order = lexicographic order here
    std::vector<std::map<int, std::vector<Digit>>> best(static_cast<std::size_t>(tstar + 1));
    for (int j = tstar - 1; j >= 0; --j) {
        for (int pid = 0; pid < n * n; ++pid) {
            if (!feas[static_cast<std::size_t>(j)][static_cast<std::size_t>(pid)]) continue;
            std::optional<std::vector<Digit>> vmin;
            for (int d = (j == tstar - 1 ? 1 : 0); d < p; ++d) {
                int q2 = pstep(pid, d);
                if (!feas[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(q2)]) continue;
                std::vector<Digit> cand;
                if (j + 1 < tstar)
                    cand = best[static_cast<std::size_t>(j + 1)].at(q2);
                cand.push_back(d);
                if (!vmin || cand < *vmin) vmin = cand;
            }
            best[static_cast<std::size_t>(j)][pid] = *vmin;
        }
    }
    const std::vector<Digit>& msb_first = best[0].at(start);
    BigInt value = 0;
    for (Digit d : msb_first) value = value * p + d;
    return value;
}

} // namespace autoseq
