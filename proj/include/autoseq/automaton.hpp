// SPDX-License-Identifier: Apache-2.0
//
// Deterministic base-p automata with output labels.  A sequence value a_n
// is read by feeding the digits of n >= 1 least significant first into the
// transition table and taking the label of the state reached.
#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "autoseq/error.hpp"
#include "autoseq/numeration.hpp"
#include "autoseq/rational.hpp"

namespace autoseq {

struct Automaton {
    int p = 0;
    std::vector<std::string> alphabet;      // output symbols, declaration order
    std::vector<std::string> state_names;   // declaration order
    std::vector<int> labels;                // state -> alphabet index
    std::vector<std::vector<int>> delta;    // delta[state][digit] -> state
    int initial = -1;

    int num_states() const { return static_cast<int>(state_names.size()); }

    int state_index(const std::string& name) const {
        for (int q = 0; q < num_states(); ++q)
            if (state_names[static_cast<std::size_t>(q)] == name) return q;
        return -1;
    }

    int symbol_index(const std::string& sym) const {
        for (int s = 0; s < static_cast<int>(alphabet.size()); ++s)
            if (alphabet[static_cast<std::size_t>(s)] == sym) return s;
        return -1;
    }

    const std::string& symbol_of(int state) const {
        return alphabet[static_cast<std::size_t>(labels[static_cast<std::size_t>(state)])];
    }
};

// Structural checks: base, label range, totality of delta, initial state.
inline void validate(const Automaton& a) {
    check_base(a.p);
    if (a.num_states() == 0) throw Error("core", "automaton has no states");
    if (a.alphabet.empty()) throw Error("core", "automaton has no output alphabet");
    if (a.initial < 0 || a.initial >= a.num_states())
        throw Error("core", "initial state out of range");
    if (a.labels.size() != a.state_names.size() || a.delta.size() != a.state_names.size())
        throw Error("core", "state table sizes disagree");
    for (int q = 0; q < a.num_states(); ++q) {
        int lab = a.labels[static_cast<std::size_t>(q)];
        if (lab < 0 || lab >= static_cast<int>(a.alphabet.size()))
            throw Error("core", "label of state " + a.state_names[static_cast<std::size_t>(q)] +
                                    " out of range");
        const auto& row = a.delta[static_cast<std::size_t>(q)];
        if (static_cast<int>(row.size()) != a.p)
            throw Error("core", "state " + a.state_names[static_cast<std::size_t>(q)] +
                                    " does not have exactly p transitions");
        for (int d = 0; d < a.p; ++d)
            if (row[static_cast<std::size_t>(d)] < 0 ||
                row[static_cast<std::size_t>(d)] >= a.num_states())
                throw Error("core", "transition target out of range from state " +
                                        a.state_names[static_cast<std::size_t>(q)]);
    }
}

inline int step(const Automaton& a, int q, Digit d) {
    return a.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(d)];
}

inline int run_path(const Automaton& a, int q, const std::vector<Digit>& path) {
    for (Digit d : path) q = step(a, q, d);
    return q;
}

// Label index of the n-th term of the sequence started at state q.
inline int eval_from(const Automaton& a, int q, std::int64_t n) {
    return a.labels[static_cast<std::size_t>(run_path(a, q, digits_lsb(n, a.p)))];
}

inline int eval_from(const Automaton& a, int q, const BigInt& n) {
    return a.labels[static_cast<std::size_t>(run_path(a, q, digits_lsb(n, a.p)))];
}

inline int eval(const Automaton& a, std::int64_t n) { return eval_from(a, a.initial, n); }

inline const std::string& eval_symbol(const Automaton& a, std::int64_t n) {
    return a.alphabet[static_cast<std::size_t>(eval(a, n))];
}

// State producing the subsequence n -> a(p^i n + j) of the sequence started
// at q: follow the i digits of j (low digit first, zero padded).
inline int subsequence_state(const Automaton& a, int q, const AffineCode& code) {
    if (code.base() != a.p) throw Error("core", "code base differs from automaton base");
    return run_path(a, q, code.path());
}

inline int subsequence_state(const Automaton& a, int q, int i, const BigInt& j) {
    return subsequence_state(a, q, AffineCode(i, j, a.p));
}

inline std::vector<int> reachable_states(const Automaton& a, int from) {
    std::vector<char> seen(static_cast<std::size_t>(a.num_states()), 0);
    std::vector<int> order;
    order.push_back(from);
    seen[static_cast<std::size_t>(from)] = 1;
    for (std::size_t k = 0; k < order.size(); ++k)
        for (int d = 0; d < a.p; ++d) {
            int t = step(a, order[k], d);
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = 1;
                order.push_back(t);
            }
        }
    return order;
}

// ---------------------------------------------------------------------------
// Text format.
//
//   # comment
//   p 2
//   alphabet A B
//   state qA A initial
//   state qB B
//   edge qA 0 qA
//   edge qA 1 qB
//   ...
//
// Tokens are whitespace separated; '#' comments run to end of line.  The
// serializer emits p, alphabet, states, then edges grouped by source state
// in declaration order, digits ascending, so parse/serialize round-trips
// byte for byte on canonical files.

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

} // namespace detail

inline Automaton parse_automaton(const std::string& text) {
    Automaton a;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_p = false;
    bool have_alphabet = false;
    std::unordered_map<std::string, int> state_idx, symbol_idx;
    std::vector<int> state_line;                    // declaration line per state
    std::vector<std::vector<int>> edge_line;        // line per transition, -1 unset

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "p") {
            if (toks.size() != 2) throw ParseError(lineno, "expected: p <int>");
            if (have_p) throw ParseError(lineno, "duplicate p declaration");
            try {
                a.p = std::stoi(toks[1]);
            } catch (const std::exception&) {
                throw ParseError(lineno, "p is not an integer: " + toks[1]);
            }
            if (a.p < 2) throw ParseError(lineno, "p must be >= 2, got " + toks[1]);
            have_p = true;
        } else if (kw == "alphabet") {
            if (have_alphabet) throw ParseError(lineno, "duplicate alphabet declaration");
            if (toks.size() < 2) throw ParseError(lineno, "alphabet needs at least one symbol");
            for (std::size_t k = 1; k < toks.size(); ++k) {
                if (symbol_idx.count(toks[k]))
                    throw ParseError(lineno, "duplicate alphabet symbol " + toks[k]);
                symbol_idx[toks[k]] = static_cast<int>(a.alphabet.size());
                a.alphabet.push_back(toks[k]);
            }
            have_alphabet = true;
        } else if (kw == "state") {
            if (!have_alphabet)
                throw ParseError(lineno, "alphabet must be declared before states");
            if (toks.size() != 3 && !(toks.size() == 4 && toks[3] == "initial"))
                throw ParseError(lineno, "expected: state <name> <symbol> [initial]");
            if (state_idx.count(toks[1]))
                throw ParseError(lineno, "duplicate state " + toks[1]);
            auto sym = symbol_idx.find(toks[2]);
            if (sym == symbol_idx.end())
                throw ParseError(lineno, "unknown symbol " + toks[2]);
            int q = static_cast<int>(a.state_names.size());
            state_idx[toks[1]] = q;
            a.state_names.push_back(toks[1]);
            a.labels.push_back(sym->second);
            state_line.push_back(lineno);
            if (toks.size() == 4) {
                if (a.initial >= 0) throw ParseError(lineno, "second initial state " + toks[1]);
                a.initial = q;
            }
        } else if (kw == "edge") {
            if (!have_p) throw ParseError(lineno, "p must be declared before edges");
            if (toks.size() != 4)
                throw ParseError(lineno, "expected: edge <src> <digit> <dst>");
            auto src = state_idx.find(toks[1]);
            if (src == state_idx.end()) throw ParseError(lineno, "unknown state " + toks[1]);
            auto dst = state_idx.find(toks[3]);
            if (dst == state_idx.end()) throw ParseError(lineno, "unknown state " + toks[3]);
            int d = -1;
            try {
                d = std::stoi(toks[2]);
            } catch (const std::exception&) {
                throw ParseError(lineno, "digit is not an integer: " + toks[2]);
            }
            if (d < 0 || d >= a.p)
                throw ParseError(lineno, "digit " + toks[2] + " out of range for p = " +
                                             std::to_string(a.p));
            a.delta.resize(a.state_names.size(),
                           std::vector<int>(static_cast<std::size_t>(a.p), -1));
            edge_line.resize(a.state_names.size(),
                             std::vector<int>(static_cast<std::size_t>(a.p), -1));
            auto& row = a.delta[static_cast<std::size_t>(src->second)];
            auto& rowline = edge_line[static_cast<std::size_t>(src->second)];
            if (row[static_cast<std::size_t>(d)] >= 0)
                throw ParseError(lineno, "duplicate transition from " + toks[1] + " on digit " +
                                             toks[2]);
            row[static_cast<std::size_t>(d)] = dst->second;
            rowline[static_cast<std::size_t>(d)] = lineno;
        } else {
            throw ParseError(lineno, "unknown keyword " + kw);
        }
    }

    if (!have_p) throw ParseError(lineno + 1, "missing p declaration");
    if (!have_alphabet) throw ParseError(lineno + 1, "missing alphabet declaration");
    if (a.state_names.empty()) throw ParseError(lineno + 1, "no states declared");
    if (a.initial < 0) throw ParseError(lineno + 1, "no state marked initial");
    a.delta.resize(a.state_names.size(), std::vector<int>(static_cast<std::size_t>(a.p), -1));
    for (int q = 0; q < a.num_states(); ++q)
        for (int d = 0; d < a.p; ++d)
            if (a.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(d)] < 0)
                throw ParseError(state_line[static_cast<std::size_t>(q)],
                                 "missing transition from " +
                                     a.state_names[static_cast<std::size_t>(q)] + " on digit " +
                                     std::to_string(d));
    validate(a);
    return a;
}

inline std::string serialize_automaton(const Automaton& a) {
    validate(a);
    std::ostringstream out;
    out << "p " << a.p << "\n";
    out << "alphabet";
    for (const auto& s : a.alphabet) out << " " << s;
    out << "\n";
    for (int q = 0; q < a.num_states(); ++q) {
        out << "state " << a.state_names[static_cast<std::size_t>(q)] << " " << a.symbol_of(q);
        if (q == a.initial) out << " initial";
        out << "\n";
    }
    for (int q = 0; q < a.num_states(); ++q)
        for (int d = 0; d < a.p; ++d)
            out << "edge " << a.state_names[static_cast<std::size_t>(q)] << " " << d << " "
                << a.state_names[static_cast<std::size_t>(step(a, q, d))] << "\n";
    return out.str();
}

} // namespace autoseq
