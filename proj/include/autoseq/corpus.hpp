// SPDX-License-Identifier: Apache-2.0
//
// Named example automata used across the test suite and exposed by the
// command line tool.
#pragma once

#include <string>
#include <vector>

#include "autoseq/automaton.hpp"
#include "autoseq/error.hpp"
#include "autoseq/permutation.hpp"

namespace autoseq {

// Two states swapped by digit 1; a_n counts the parity of one-bits of n.
inline Automaton corpus_thue_morse() {
    Automaton a;
    a.p = 2;
    a.alphabet = {"A", "B"};
    a.state_names = {"qA", "qB"};
    a.labels = {0, 1};
    a.delta = {{0, 1}, {1, 0}};
    a.initial = 0;
    validate(a);
    return a;
}

namespace detail {

// States 1..degree with digit maps given as permutations; state k gets
// label "d<k>"; initial is 1-based.
inline Automaton permutation_automaton(const std::vector<Permutation>& digit_maps,
                                       int initial_1based) {
    int degree = digit_maps[0].degree();
    Automaton a;
    a.p = static_cast<int>(digit_maps.size());
    for (int x = 1; x <= degree; ++x) a.alphabet.push_back("d" + std::to_string(x));
    for (int x = 0; x < degree; ++x) {
        a.state_names.push_back("s" + std::to_string(x + 1));
        a.labels.push_back(x);
        std::vector<int> row;
        for (const auto& g : digit_maps) row.push_back(g(x));
        a.delta.push_back(row);
    }
    a.initial = initial_1based - 1;
    validate(a);
    return a;
}

} // namespace detail

// Base 7 automaton on six states whose output d_i reports the residue class
// mod 7 of a classical binomial-sum sequence; digit maps are the two 6-cycles
// below and the identity on digits 0 and 6.
inline Automaton corpus_apery_mod7() {
    Permutation id = identity_perm(6);
    Permutation t1 = parse_cycles("(1,5,4,6,2,3)", 6);
    Permutation t2 = parse_cycles("(1,3,2,6,4,5)", 6);
    std::vector<Permutation> maps = {id, t1, t2, t2, t2, t1, id};
    return detail::permutation_automaton(maps, 1);
}

// Base 2 automaton on eight states whose digit maps generate the quaternion
// group of order 8; initial state 6.
inline Automaton corpus_quaternion() {
    Permutation t0 = parse_cycles("(1,3,4,7)(5,6,8,2)", 8);
    Permutation t1 = parse_cycles("(1,2,4,6)(5,3,8,7)", 8);
    return detail::permutation_automaton({t0, t1}, 6);
}

// a_n = leftmost (most significant) base-p digit of n; p - 1 states, one per
// nonzero digit, digit 0 keeps the state.
inline Automaton corpus_leftmost_digit(int p) {
    check_base(p);
    Automaton a;
    a.p = p;
    for (int s = 1; s < p; ++s) a.alphabet.push_back("d" + std::to_string(s));
    for (int s = 1; s < p; ++s) {
        a.state_names.push_back("s" + std::to_string(s));
        a.labels.push_back(s - 1);
        std::vector<int> row;
        row.push_back(s - 1); // digit 0 keeps the current leftmost digit
        for (int d = 1; d < p; ++d) row.push_back(d - 1);
        a.delta.push_back(row);
    }
    a.initial = 0;
    validate(a);
    return a;
}

// Square corners acted on by the rotation (1,2,3,4) on digit 0 and the
// diagonal reflection (2,4) on digit 1; all four corners distinguishable.
inline Automaton corpus_dihedral_square() {
    Permutation rot = parse_cycles("(1,2,3,4)", 4);
    Permutation refl = parse_cycles("(2,4)", 4);
    Automaton a = detail::permutation_automaton({rot, refl}, 1);
    for (int x = 0; x < 4; ++x)
        a.state_names[static_cast<std::size_t>(x)] = "c" + std::to_string(x + 1);
    return a;
}

inline std::vector<std::string> corpus_names() {
    return {"thue_morse", "apery_mod7", "quaternion_fig3", "leftmost_digit(p)",
            "dihedral_square"};
}

// Accepts "leftmost_digit(3)" and "leftmost_digit_p3" spellings.
inline Automaton corpus(const std::string& name) {
    if (name == "thue_morse") return corpus_thue_morse();
    if (name == "apery_mod7") return corpus_apery_mod7();
    if (name == "quaternion_fig3") return corpus_quaternion();
    if (name == "dihedral_square") return corpus_dihedral_square();
    const std::string fn = "leftmost_digit(";
    const std::string us = "leftmost_digit_p";
    try {
        if (name.rfind(fn, 0) == 0 && name.back() == ')')
            return corpus_leftmost_digit(
                std::stoi(name.substr(fn.size(), name.size() - fn.size() - 1)));
        if (name.rfind(us, 0) == 0)
            return corpus_leftmost_digit(std::stoi(name.substr(us.size())));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        // fall through to the unknown-name error
    }
    throw Error("cli", "unknown corpus name: " + name);
}

} // namespace autoseq
