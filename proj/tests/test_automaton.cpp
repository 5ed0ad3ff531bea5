// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "autoseq/automaton.hpp"
#include "autoseq/corpus.hpp"
#include "oracles.hpp"

using namespace autoseq;

namespace {

const char* kTwoStateFile = R"(# two states, swap on 1
p 2
alphabet A B
state qA A initial
state qB B
edge qA 0 qA
edge qA 1 qB
edge qB 0 qB
edge qB 1 qA
)";

int parse_error_line(const std::string& text) {
    try {
        parse_automaton(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

} // namespace

TEST_CASE("the two state swap automaton starts B B A B A A B B") {
    Automaton a = corpus_thue_morse();
    std::string prefix;
    for (std::int64_t n = 1; n <= 8; ++n) prefix += eval_symbol(a, n);
    CHECK(prefix == "BBABAABB");
}

TEST_CASE("two state output equals the parity of one bits") {
    Automaton a = corpus_thue_morse();
    for (std::int64_t n = 1; n <= 4096; ++n)
        CHECK(eval(a, n) == oracles::thue_morse_parity(n));
}

TEST_CASE("term zero is rejected everywhere") {
    Automaton a = corpus_thue_morse();
    CHECK_THROWS_AS(eval(a, 0), Error);
    CHECK_THROWS_AS(eval(a, -1), Error);
    CHECK_THROWS_AS(eval_from(a, 0, BigInt(0)), Error);
}

TEST_CASE("subsequence states produce the right terms") {
    std::mt19937 rng(5);
    for (const char* name : {"thue_morse", "apery_mod7", "quaternion_fig3"}) {
        Automaton a = corpus(name);
        for (int rep = 0; rep < 60; ++rep) {
            int i = static_cast<int>(rng() % 4);
            BigInt j = BigInt(rng()) % int_pow(a.p, static_cast<unsigned>(i));
            std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 500);
            int q = subsequence_state(a, a.initial, i, j);
            BigInt idx = int_pow(a.p, static_cast<unsigned>(i)) * n + j;
            CHECK(eval_from(a, q, BigInt(n)) == eval_from(a, a.initial, idx));
        }
    }
}

TEST_CASE("parse accepts the documented format") {
    Automaton a = parse_automaton(kTwoStateFile);
    CHECK(a.p == 2);
    CHECK(a.num_states() == 2);
    CHECK(a.alphabet == std::vector<std::string>{"A", "B"});
    CHECK(a.initial == 0);
    CHECK(eval_symbol(a, 3) == "A");
}

TEST_CASE("serialization round trips byte for byte") {
    for (const char* name :
         {"thue_morse", "apery_mod7", "quaternion_fig3", "dihedral_square"}) {
        Automaton a = corpus(name);
        std::string text = serialize_automaton(a);
        CHECK(serialize_automaton(parse_automaton(text)) == text);
    }
    std::string canonical = serialize_automaton(parse_automaton(kTwoStateFile));
    CHECK(serialize_automaton(parse_automaton(canonical)) == canonical);
}

TEST_CASE("parse errors carry one based line numbers") {
    CHECK(parse_error_line("p 2\np 2\n") == 2);
    CHECK(parse_error_line("p 1\n") == 1);
    CHECK(parse_error_line("p x\n") == 1);
    CHECK(parse_error_line("wibble\n") == 1);
    CHECK(parse_error_line("p 2\nalphabet A A\n") == 2);
    CHECK(parse_error_line("p 2\nalphabet A\nstate q B initial\n") == 3);
    CHECK(parse_error_line("p 2\nalphabet A\nstate q A initial\nstate q A\n") == 4);
    CHECK(parse_error_line("p 2\nalphabet A\nstate q A initial\nstate r A initial\n") == 4);
    CHECK(parse_error_line("p 2\nalphabet A\nstate q A initial\nedge q 2 q\n") == 4);
    CHECK(parse_error_line("p 2\nalphabet A\nstate q A initial\nedge z 0 q\n") == 4);
    CHECK(parse_error_line(
              "p 2\nalphabet A\nstate q A initial\nedge q 0 q\nedge q 0 q\n") == 5);
    // missing transition reported at the state's declaration line
    CHECK(parse_error_line("p 2\nalphabet A\nstate q A initial\nedge q 0 q\n") == 3);
    // missing sections reported one line past the end
    CHECK(parse_error_line("alphabet A\nstate q A initial\n") == 3);
    CHECK(parse_error_line("p 2\n") == 2);
    CHECK(parse_error_line("p 2\nalphabet A\n") == 3);
    CHECK(parse_error_line("p 2\nalphabet A\nstate q A\nedge q 0 q\nedge q 1 q\n") == 6);
    // states must come after the alphabet
    CHECK(parse_error_line("p 2\nstate q A initial\n") == 2);
    // edges before p
    CHECK(parse_error_line("alphabet A\nstate q A initial\nedge q 0 q\n") == 3);
}

TEST_CASE("validation rejects malformed automata") {
    Automaton a = corpus_thue_morse();
    a.initial = 5;
    CHECK_THROWS_AS(validate(a), Error);
    a = corpus_thue_morse();
    a.labels[0] = 9;
    CHECK_THROWS_AS(validate(a), Error);
    a = corpus_thue_morse();
    a.delta[0][1] = -1;
    CHECK_THROWS_AS(validate(a), Error);
    a = corpus_thue_morse();
    a.delta[0].pop_back();
    CHECK_THROWS_AS(validate(a), Error);
}

TEST_CASE("corpus entries match their oracles") {
    Automaton apery = corpus("apery_mod7");
    for (long long n = 1; n <= 120; ++n) {
        int residue = oracles::apery_mod7(n);
        REQUIRE(residue != 0);
        CHECK(eval_symbol(apery, n) == "d" + std::to_string(residue));
    }
    Automaton left = corpus("leftmost_digit(3)");
    for (long long n = 1; n <= 1000; ++n)
        CHECK(eval_symbol(left, n) == "d" + std::to_string(oracles::leftmost_digit(n, 3)));
    Automaton left7 = corpus("leftmost_digit_p7");
    CHECK(left7.p == 7);
    for (long long n = 1; n <= 500; ++n)
        CHECK(eval_symbol(left7, n) == "d" + std::to_string(oracles::leftmost_digit(n, 7)));
}

TEST_CASE("unknown corpus names are rejected") {
    CHECK_THROWS_AS(corpus("nope"), Error);
    CHECK_THROWS_AS(corpus("leftmost_digit(1)"), Error);
    CHECK_NOTHROW(corpus("leftmost_digit(5)"));
}

TEST_CASE("reachable states from the initial state") {
    Automaton a = parse_automaton(R"(p 2
alphabet A B
state q0 A initial
state q1 B
state island B
edge q0 0 q0
edge q0 1 q1
edge q1 0 q1
edge q1 1 q0
edge island 0 island
edge island 1 island
)");
    auto reach = reachable_states(a, a.initial);
    CHECK(reach.size() == 2);
}

TEST_CASE("random automata evaluate consistently with digit paths") {
    std::mt19937 rng(99);
    for (int rep = 0; rep < 50; ++rep) {
        int p = 2 + static_cast<int>(rng() % 4);
        Automaton a = oracles::random_automaton(rng, p, 6, 3);
        for (std::int64_t n = 1; n <= 64; ++n) {
            int q = run_path(a, a.initial, digits_lsb(n, p));
            CHECK(eval(a, n) == a.labels[static_cast<std::size_t>(q)]);
        }
    }
}
