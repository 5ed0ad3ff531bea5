// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "autoseq/corpus.hpp"
#include "autoseq/equivalence.hpp"
#include "autoseq/kernel.hpp"
#include "oracles.hpp"

using namespace autoseq;

namespace {

// a_n = A when n is a power of two, B otherwise.  Its subsequence graph
// cannot carry a consistent labeling: the word "1" must end on an A vertex
// for n = 1 and on a B vertex for n = 3, yet both words end on the same
// vertex.
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

} // namespace

TEST_CASE("partition keeps only states reachable from the start") {
    Automaton a;
    a.p = 2;
    a.alphabet = {"A", "B"};
    a.state_names = {"q0", "island"};
    a.labels = {0, 1};
    a.delta = {{0, 0}, {1, 1}};
    a.initial = 0;
    validate(a);
    auto part = kernel_partition(a);
    CHECK(part == std::vector<int>{0, -1});
    KernelGraph g = build_kernel_graph(a);
    CHECK(g.num_vertices() == 1);
    CHECK(g.class_of == std::vector<int>{0, -1});
    CHECK(g.members == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("two-state parity sequence has a two-vertex graph") {
    KernelGraph g = build_kernel_graph(corpus("thue_morse"));
    CHECK(g.p == 2);
    CHECK(g.num_vertices() == 2);
    CHECK(g.base == 0);
    CHECK(g.gen[0] == std::vector<int>{0, 1});
    CHECK(g.gen[1] == std::vector<int>{1, 0});
    CHECK(g.first_terms[0] == std::vector<int>{1}); // term 1 of the sequence is B
    CHECK(g.first_terms[1] == std::vector<int>{0});
    CHECK(g.class_of == std::vector<int>{0, 1});
}

TEST_CASE("graph sizes across the corpus") {
    CHECK(build_kernel_graph(corpus("apery_mod7")).num_vertices() == 6);
    CHECK(build_kernel_graph(corpus("quaternion_fig3")).num_vertices() == 8);
    CHECK(build_kernel_graph(corpus("dihedral_square")).num_vertices() == 4);
    CHECK(build_kernel_graph(corpus("leftmost_digit(3)")).num_vertices() == 1);
    CHECK(build_kernel_graph(corpus("leftmost_digit(7)")).num_vertices() == 1);
}

TEST_CASE("label ordering numbers vertices by smallest member state") {
    KernelGraph g = build_kernel_graph(corpus("apery_mod7"), VertexOrder::labels);
    for (int q = 0; q < 6; ++q) CHECK(g.class_of[static_cast<std::size_t>(q)] == q);
    // the two orders agree up to renaming
    KernelGraph b = build_kernel_graph(corpus("apery_mod7"), VertexOrder::bfs);
    CHECK(b.num_vertices() == g.num_vertices());
    CHECK(b.members[static_cast<std::size_t>(b.base)] ==
          g.members[static_cast<std::size_t>(g.base)]);
}

TEST_CASE("codes locate subsequence vertices") {
    KernelGraph g = build_kernel_graph(corpus("thue_morse"));
    CHECK(kernel_vertex(g, AffineCode()) == g.base);
    CHECK(kernel_vertex(g, AffineCode(1, 1, 2)) == 1); // [2X+1]
    CHECK(kernel_vertex(g, AffineCode(2, 3, 2)) == 0); // [4X+3]
    CHECK(kernel_vertex(g, AffineCode(3, 5, 2)) == 0); // [8X+5], two one-bits
    CHECK_THROWS_AS(kernel_vertex(g, AffineCode(1, 2, 3)), Error);
}

TEST_CASE("digit maps close into the expected monoids") {
    auto tm = monoid_closure(build_kernel_graph(corpus("thue_morse")));
    CHECK(tm.order() == 2);
    CHECK(tm.is_group);
    CHECK(tm.generator_index == std::vector<int>{0, 1});

    auto ap = monoid_closure(build_kernel_graph(corpus("apery_mod7")));
    CHECK(ap.order() == 6);
    CHECK(ap.is_group);

    auto qu = monoid_closure(build_kernel_graph(corpus("quaternion_fig3")));
    CHECK(qu.order() == 8);
    CHECK(qu.is_group);

    // four vertices but eight maps: more maps than vertices
    auto dh = monoid_closure(build_kernel_graph(corpus("dihedral_square")));
    CHECK(dh.order() == 8);
    CHECK(dh.is_group);

    auto lm = monoid_closure(build_kernel_graph(corpus("leftmost_digit(3)")));
    CHECK(lm.order() == 1);
    CHECK(lm.is_group);

    auto p2 = monoid_closure(build_kernel_graph(power_of_two()));
    CHECK(p2.order() == 2);
    CHECK_FALSE(p2.is_group);
}

TEST_CASE("global identities exist exactly for bijective digit maps") {
    GlobalRelations tm = global_relations(build_kernel_graph(corpus("thue_morse")));
    CHECK(tm.all);
    CHECK(tm.witness[0] == std::vector<Digit>{0});
    CHECK(tm.witness[1] == std::vector<Digit>{1, 1});

    KernelGraph p2 = build_kernel_graph(power_of_two());
    GlobalRelations gr = global_relations(p2);
    CHECK(gr.has_type[0]);
    CHECK_FALSE(gr.has_type[1]);
    CHECK_FALSE(gr.all);
    CHECK(gr.witness[1].empty());

    GlobalRelations ap = global_relations(build_kernel_graph(corpus("apery_mod7")));
    CHECK(ap.all);
    for (int r = 0; r < 7; ++r) {
        const auto& w = ap.witness[static_cast<std::size_t>(r)];
        REQUIRE_FALSE(w.empty());
        for (Digit d : w) CHECK(d == r);
        // the witness really is a global identity
        KernelGraph g = build_kernel_graph(corpus("apery_mod7"));
        for (int v = 0; v < g.num_vertices(); ++v) CHECK(g.apply_path(v, w) == v);
    }
}

TEST_CASE("relation-language equality with witnesses") {
    KernelGraph tm = build_kernel_graph(corpus("thue_morse"));
    CHECK(rel_equal(tm, 0, 1).equal);
    CHECK(rel_equal(tm, 0, 0).equal);

    KernelGraph p2 = build_kernel_graph(power_of_two());
    RelEqualResult r = rel_equal(p2, 0, 1);
    REQUIRE_FALSE(r.equal);
    REQUIRE_FALSE(r.witness.empty());
    bool fixes_u = p2.apply_path(0, r.witness) == 0;
    bool fixes_v = p2.apply_path(1, r.witness) == 1;
    CHECK(fixes_u != fixes_v);
}

TEST_CASE("shortest relation words per type") {
    KernelGraph tm = build_kernel_graph(corpus("thue_morse"));
    auto rels = minimal_relations(tm, tm.base);
    REQUIRE(rels.size() == 2);
    CHECK(rels[0].type == 0);
    CHECK(rels[0].path == std::vector<Digit>{0});
    CHECK(rels[1].type == 1);
    CHECK(rels[1].path == std::vector<Digit>{1, 1});

    KernelGraph p2 = build_kernel_graph(power_of_two());
    auto at_base = minimal_relations(p2, 0);
    REQUIRE(at_base.size() == 1); // no word ending in 1 returns to the base
    CHECK(at_base[0].type == 0);
    CHECK(at_base[0].path == std::vector<Digit>{0});
    auto at_sink = minimal_relations(p2, 1);
    REQUIRE(at_sink.size() == 2);
    CHECK(at_sink[0].path == std::vector<Digit>{0});
    CHECK(at_sink[1].path == std::vector<Digit>{1});

    // each reported word fixes its vertex and ends with its type
    KernelGraph ap = build_kernel_graph(corpus("apery_mod7"));
    for (int v = 0; v < ap.num_vertices(); ++v)
        for (const auto& m : minimal_relations(ap, v)) {
            REQUIRE_FALSE(m.path.empty());
            CHECK(m.path.back() == m.type);
            CHECK(ap.apply_path(v, m.path) == v);
        }
}

TEST_CASE("path strings read most significant digit first") {
    CHECK(path_to_string({1, 0, 1}) == "101");
    CHECK(word_of_path({1, 0, 1}) == "101");
    CHECK(path_to_string({0, 1}) == "10");
    CHECK(word_of_path({0, 1}) == "01");
}

TEST_CASE("the expanded graph automaton always recomputes the sequence") {
    for (const char* name : {"thue_morse", "apery_mod7", "quaternion_fig3"}) {
        Automaton src = corpus(name);
        Automaton gsa = graph_sequence_automaton(build_kernel_graph(src));
        CHECK(sequences_equal(gsa, gsa.initial, src, src.initial));
    }
    // holds even when no single labeling of the graph itself works
    Automaton p2 = power_of_two();
    Automaton gsa = graph_sequence_automaton(build_kernel_graph(p2));
    CHECK(sequences_equal(gsa, gsa.initial, p2, p2.initial));
}

TEST_CASE("derived labeling succeeds or pins down a conflict") {
    for (const char* name : {"thue_morse", "apery_mod7", "quaternion_fig3", "dihedral_square"}) {
        Automaton src = corpus(name);
        KernelGraph g = build_kernel_graph(src);
        DerivedLabeling lab = derived_labeling(g);
        CHECK(lab.consistent);
        ReproducesResult r = reproduces(src, g);
        CHECK(r.reproduces);
        CHECK_FALSE(r.labeling_conflict);
        CHECK_FALSE(r.witness_index.has_value());
    }

    for (const Automaton& src : {corpus("leftmost_digit(3)"), power_of_two()}) {
        KernelGraph g = build_kernel_graph(src);
        DerivedLabeling lab = derived_labeling(g);
        REQUIRE_FALSE(lab.consistent);
        CHECK(lab.conflict_vertex >= 0);
        CHECK(lab.conflict_a != lab.conflict_b);
        ReproducesResult r = reproduces(src, g);
        CHECK_FALSE(r.reproduces);
        CHECK(r.labeling_conflict);
    }
}

TEST_CASE("first difference index is least") {
    std::mt19937 rng(91);
    for (int rep = 0; rep < 60; ++rep) {
        Automaton a = oracles::random_automaton(rng, 2, 4, 2);
        int qa = static_cast<int>(rng() % static_cast<unsigned>(a.num_states()));
        int qb = static_cast<int>(rng() % static_cast<unsigned>(a.num_states()));
        const std::int64_t scan = 2048;
        std::int64_t brute = -1;
        for (std::int64_t n = 1; n <= scan && brute < 0; ++n)
            if (eval_from(a, qa, n) != eval_from(a, qb, n)) brute = n;
        if (sequences_equal(a, qa, a, qb)) {
            CHECK(brute == -1);
            CHECK_FALSE(distinguishing_index(a, qa, a, qb).has_value());
        } else {
            auto idx = distinguishing_index(a, qa, a, qb);
            REQUIRE(idx.has_value());
            if (brute >= 0) {
                CHECK(*idx == BigInt(brute));
            } else {
                CHECK(*idx > scan);
            }
        }
    }
}
