// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "autoseq/classify.hpp"
#include "autoseq/corpus.hpp"
#include "oracles.hpp"

using namespace autoseq;

namespace {

Automaton power_of_two() {
    Automaton a;
    a.p = 2;
    a.alphabet = {"A", "B"};
    a.state_names = {"z", "pow", "other"};
    a.labels = {1, 0, 1};
    a.delta = {{0, 1}, {1, 2}, {2, 2}};
    a.initial = 0;
    validate(a);
    return a;
}

Classification classify_corpus(const std::string& name) {
    return classify(build_kernel_graph(corpus(name)));
}

} // namespace

TEST_CASE("parity sequence: group, Cayley, homogeneous, self-similar") {
    Classification c = classify_corpus("thue_morse");
    CHECK(c.p == 2);
    CHECK(c.num_vertices == 2);
    CHECK(c.monoid_order == 2);
    CHECK(c.r1);
    CHECK(c.is_group);
    CHECK(c.is_cayley);
    CHECK(c.homogeneous);
    CHECK(c.self_similar);
    CHECK(c.reproduces);
    CHECK_FALSE(c.vertex_missing_base.has_value());
    CHECK_FALSE(c.rel_mismatch_vertex.has_value());
    CHECK_FALSE(c.dissimilar_vertex.has_value());
    CHECK_FALSE(c.conflict_vertex.has_value());
}

TEST_CASE("base-7 residue sequence: all flags hold") {
    Classification c = classify_corpus("apery_mod7");
    CHECK(c.p == 7);
    CHECK(c.num_vertices == 6);
    CHECK(c.monoid_order == 6);
    CHECK(c.r1);
    CHECK(c.is_group);
    CHECK(c.is_cayley);
    CHECK(c.homogeneous);
    CHECK(c.self_similar);
    CHECK(c.reproduces);
}

TEST_CASE("eight-state group sequence: all flags hold") {
    Classification c = classify_corpus("quaternion_fig3");
    CHECK(c.num_vertices == 8);
    CHECK(c.monoid_order == 8);
    CHECK(c.is_group);
    CHECK(c.is_cayley);
    CHECK(c.homogeneous);
    CHECK(c.self_similar);
    CHECK(c.reproduces);
}

TEST_CASE("square-corner sequence: group but more elements than vertices") {
    Classification c = classify_corpus("dihedral_square");
    CHECK(c.num_vertices == 4);
    CHECK(c.monoid_order == 8);
    CHECK(c.r1);
    CHECK(c.is_group);
    CHECK_FALSE(c.is_cayley);
    CHECK_FALSE(c.homogeneous);
    CHECK_FALSE(c.self_similar);
    CHECK(c.reproduces);
    // the homogeneity witness must actually separate the relation languages
    REQUIRE(c.rel_mismatch_vertex.has_value());
    KernelGraph g = build_kernel_graph(corpus("dihedral_square"));
    int u = *c.rel_mismatch_vertex;
    bool fixes_u = g.apply_path(u, c.rel_mismatch_word) == u;
    bool fixes_base = g.apply_path(g.base, c.rel_mismatch_word) == g.base;
    CHECK(fixes_u != fixes_base);
}

TEST_CASE("single-vertex graph that cannot be relabeled into its sequence") {
    Classification c = classify_corpus("leftmost_digit(3)");
    CHECK(c.num_vertices == 1);
    CHECK(c.monoid_order == 1);
    CHECK(c.r1);
    CHECK(c.is_group);
    CHECK(c.is_cayley);
    CHECK(c.homogeneous);
    CHECK(c.self_similar);
    CHECK_FALSE(c.reproduces);
    REQUIRE(c.conflict_vertex.has_value());
    CHECK(*c.conflict_vertex == 0);
    CHECK_FALSE(c.conflict_letters.empty());
}

TEST_CASE("collapsing digit map breaks every structural property") {
    Classification c = classify(build_kernel_graph(power_of_two()));
    CHECK(c.num_vertices == 2);
    CHECK_FALSE(c.r1);
    CHECK_FALSE(c.is_group);
    CHECK_FALSE(c.is_cayley);
    CHECK_FALSE(c.homogeneous);
    CHECK(c.vertex_missing_base.has_value()); // the sink never returns
    CHECK_FALSE(c.self_similar);
    CHECK_FALSE(c.reproduces);
}

TEST_CASE("alphabet bijections between subsequences") {
    KernelGraph tm = build_kernel_graph(corpus("thue_morse"));
    SimilarityResult s = similarity_bijection(tm, 1);
    REQUIRE(s.similar);
    CHECK(s.phi == std::vector<int>{1, 0}); // letters swapped

    SimilarityResult id = similarity_bijection(tm, tm.base);
    REQUIRE(id.similar);
    CHECK(id.phi == std::vector<int>{0, 1});

    KernelGraph p2 = build_kernel_graph(power_of_two());
    SimilarityResult bad = similarity_bijection(p2, 1);
    CHECK_FALSE(bad.similar);
    CHECK_FALSE(bad.reason.empty());
}

TEST_CASE("digit maps as permutations") {
    auto maps = digit_permutations(corpus("thue_morse"));
    REQUIRE(maps.size() == 2);
    CHECK(maps[0] == identity_perm(2));
    CHECK(maps[1] == parse_cycles("(1,2)", 2));
    CHECK_THROWS_AS(digit_permutations(power_of_two()), Error);
}

TEST_CASE("start-state minimality of labeled actions") {
    CHECK(dagger_check(corpus("thue_morse")).holds);
    CHECK(dagger_check(corpus("quaternion_fig3")).holds);
    CHECK(dagger_check(corpus("dihedral_square")).holds);

    // constant labels: any nontrivial element moves the start silently
    Automaton flat = corpus("thue_morse");
    flat.alphabet = {"A"};
    flat.labels = {0, 0};
    DaggerResult d = dagger_check(flat);
    CHECK_FALSE(d.holds);
    REQUIRE(d.witness.has_value());
    CHECK(*d.witness == "(1,2)");

    Automaton stuck;
    stuck.p = 2;
    stuck.alphabet = {"A", "B"};
    stuck.state_names = {"q0", "q1"};
    stuck.labels = {0, 1};
    stuck.delta = {{0, 0}, {1, 1}};
    stuck.initial = 0;
    CHECK_THROWS_AS(dagger_check(stuck), Error);
}

TEST_CASE("label-invariance subgroups") {
    PermGroup c4 = PermGroup::generate({parse_cycles("(1,2,3,4)", 4)});
    InvarianceSubgroup h = invariance_subgroup(c4, {0, 1, 0, 1});
    CHECK(h.elements == std::vector<int>{0, 2});
    CHECK(h.normal);
    InvarianceSubgroup full = invariance_subgroup(c4, {0, 0, 0, 0});
    CHECK(full.elements.size() == 4);
    CHECK_THROWS_AS(invariance_subgroup(c4, {0, 1}), Error);

    InvarianceSubgroup tm = invariance_subgroup(corpus("thue_morse"));
    CHECK(tm.elements == std::vector<int>{0});
    CHECK(tm.normal);
    InvarianceSubgroup qu = invariance_subgroup(corpus("quaternion_fig3"));
    CHECK(qu.elements == std::vector<int>{0});
    CHECK(qu.normal);
    // more group elements than states
    CHECK_THROWS_AS(invariance_subgroup(corpus("dihedral_square")), Error);
}

TEST_CASE("letters as cosets of the base-letter stabilizer") {
    auto tm = coset_structure(build_kernel_graph(corpus("thue_morse")));
    REQUIRE(tm.has_value());
    CHECK(tm->group_order == 2);
    CHECK(tm->k_order == 1);
    CHECK(tm->core_trivial);
    CHECK(tm->natural_labeling);
    CHECK(tm->k_generators == std::vector<std::string>{"()"});

    auto ap = coset_structure(build_kernel_graph(corpus("apery_mod7")));
    REQUIRE(ap.has_value());
    CHECK(ap->group_order == 6);
    CHECK(ap->k_order == 1);
    CHECK(ap->core_trivial);
    CHECK(ap->natural_labeling);

    auto qu = coset_structure(build_kernel_graph(corpus("quaternion_fig3")));
    REQUIRE(qu.has_value());
    CHECK(qu->group_order == 8);
    CHECK(qu->k_order == 1);
    CHECK(qu->core_trivial);
    CHECK(qu->natural_labeling);
    int nonempty = 0;
    for (const auto& fiber : qu->letter_cosets)
        if (!fiber.empty()) ++nonempty;
    CHECK(nonempty == 8);

    CHECK_FALSE(coset_structure(build_kernel_graph(corpus("dihedral_square"))).has_value());
    CHECK_FALSE(coset_structure(build_kernel_graph(power_of_two())).has_value());
    CHECK_FALSE(coset_structure(build_kernel_graph(corpus("leftmost_digit(3)"))).has_value());
}

TEST_CASE("structural criteria agree on random base-2 automata") {
    std::mt19937 rng(2026);
    int groups_seen = 0, nongroups_seen = 0;
    for (int rep = 0; rep < 200; ++rep) {
        Automaton a = oracles::random_automaton(rng, 2, 6, 2 + static_cast<int>(rng() % 2));
        KernelGraph g = build_kernel_graph(a);
        Classification c;
        // the p = 2 cross-checks inside classify() must never fire
        REQUIRE_NOTHROW(c = classify(g));
        CHECK(c.r1 == c.is_group);
        CHECK(c.homogeneous == (c.is_group && c.is_cayley));
        if (c.homogeneous) CHECK(c.r1);
        if (c.self_similar) CHECK(c.homogeneous);
        if (c.is_group) {
            CHECK(c.reproduces);
            ++groups_seen;
        } else {
            ++nongroups_seen;
        }
    }
    // the sample must exercise both sides
    CHECK(groups_seen > 0);
    CHECK(nongroups_seen > 0);
}
