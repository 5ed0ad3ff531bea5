// SPDX-License-Identifier: Apache-2.0
//
// Report structures for the command line front end.  Every report renders
// to deterministic text and serializes to JSON, and parsing the JSON back
// regenerates the identical text.  Reports are flat value types: ints,
// bools, strings and arrays only, so the JSON conversions stay mechanical.
#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "autoseq/automaton.hpp"
#include "autoseq/classify.hpp"
#include "autoseq/fraction.hpp"
#include "autoseq/frequency.hpp"
#include "autoseq/kernel.hpp"
#include "autoseq/numeration.hpp"
#include "autoseq/poly.hpp"

namespace autoseq {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Shared json helpers.

inline Json poly_to_json(const Poly& f) {
    Json arr = Json::array();
    for (const auto& c : f.coeffs()) arr.push_back(rat_str(c));
    return arr;
}

inline Poly poly_from_json(const Json& j) {
    std::vector<BigRat> c;
    for (const auto& v : j) c.push_back(BigRat(v.get<std::string>()));
    return Poly(std::move(c));
}

inline Json mpoly_to_json(const MPoly& f) {
    Json j;
    j["nvars"] = f.nvars();
    Json terms = Json::array();
    for (const auto& [e, v] : f.terms()) {
        Json t;
        t["exp"] = e;
        t["coeff"] = rat_str(v);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

inline MPoly mpoly_from_json(const Json& j) {
    MPoly f(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms")) {
        std::vector<int> e = t.at("exp").get<std::vector<int>>();
        f = f + monomial_of(f.nvars(), e, BigRat(t.at("coeff").get<std::string>()));
    }
    return f;
}

inline std::string double_str(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateReport {
    bool ok = true;
    int p = 0;
    int num_states = 0;
    std::vector<std::string> alphabet;
    std::string initial;
    std::string canonical_text;
};

inline ValidateReport make_validate_report(const Automaton& a) {
    ValidateReport r;
    r.p = a.p;
    r.num_states = a.num_states();
    r.alphabet = a.alphabet;
    r.initial = a.state_names[static_cast<std::size_t>(a.initial)];
    r.canonical_text = serialize_automaton(a);
    return r;
}

inline Json to_json(const ValidateReport& r) {
    Json j;
    j["report"] = "validate";
    j["ok"] = r.ok;
    j["p"] = r.p;
    j["states"] = r.num_states;
    j["alphabet"] = r.alphabet;
    j["initial"] = r.initial;
    j["canonical"] = r.canonical_text;
    return j;
}

inline void from_json_report(const Json& j, ValidateReport& r) {
    r.ok = j.at("ok").get<bool>();
    r.p = j.at("p").get<int>();
    r.num_states = j.at("states").get<int>();
    r.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    r.initial = j.at("initial").get<std::string>();
    r.canonical_text = j.at("canonical").get<std::string>();
}

inline std::string render(const ValidateReport& r) {
    std::ostringstream out;
    out << "ok: " << r.num_states << " states, base " << r.p << ", " << r.alphabet.size()
        << " letters, initial " << r.initial << "\n";
    out << r.canonical_text;
    return out.str();
}

// ---------------------------------------------------------------------------
// eval

struct EvalReport {
    std::string index_from, index_to; // inclusive range, decimal strings
    std::vector<std::string> symbols;
};

inline EvalReport make_eval_report(const Automaton& a, const BigInt& from, const BigInt& to) {
    if (from < 1) throw Error("cli", "sequence index must be >= 1");
    if (to < from) throw Error("cli", "empty index range");
    if (to - from > 1000000) throw SizeError("cli", "index range too long");
    EvalReport r;
    r.index_from = from.str();
    r.index_to = to.str();
    for (BigInt n = from; n <= to; ++n)
        r.symbols.push_back(a.alphabet[static_cast<std::size_t>(eval_from(a, a.initial, n))]);
    return r;
}

inline Json to_json(const EvalReport& r) {
    Json j;
    j["report"] = "eval";
    j["from"] = r.index_from;
    j["to"] = r.index_to;
    j["symbols"] = r.symbols;
    return j;
}

inline void from_json_report(const Json& j, EvalReport& r) {
    r.index_from = j.at("from").get<std::string>();
    r.index_to = j.at("to").get<std::string>();
    r.symbols = j.at("symbols").get<std::vector<std::string>>();
}

inline std::string render(const EvalReport& r) {
    std::ostringstream out;
    out << "a[" << r.index_from << ".." << r.index_to << "]:";
    for (const auto& s : r.symbols) out << " " << s;
    out << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// kernel

struct VertexReport {
    int index = 0;
    std::string code; // representative subsequence, e.g. [4X+3]
    std::vector<std::string> members;
    std::vector<std::string> first_terms;
    std::vector<int> edges; // per digit
};

struct RelationReport {
    int type = 0;
    std::string exponent;  // i of the pair (i, j)
    std::string offset;    // j
    std::string word;      // most significant digit first
};

struct KernelReport {
    int p = 0;
    int num_vertices = 0;
    int base = 0;
    std::string order;
    int monoid_order = 0;
    bool is_group = false;
    std::vector<VertexReport> vertices;
    std::vector<RelationReport> base_relations; // minimal relation per type
};

inline RelationReport make_relation_report(const std::vector<Digit>& path, int p) {
    AffineCode code = word_to_affine(path, p);
    RelationReport r;
    r.type = path.empty() ? 0 : path.back();
    r.exponent = std::to_string(code.exponent());
    r.offset = code.offset().str();
    r.word = path_to_string(path);
    return r;
}

inline KernelReport make_kernel_report(const Automaton& a, const KernelGraph& g,
                                       VertexOrder order) {
    KernelReport r;
    r.p = g.p;
    r.num_vertices = g.num_vertices();
    r.base = g.base;
    r.order = order == VertexOrder::bfs ? "bfs" : "labels";
    TransformationMonoid m = monoid_closure(g);
    r.monoid_order = m.order();
    r.is_group = m.is_group;

    // lexicographically least shortest path from the base to each vertex
    std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()), -2);
    std::vector<Digit> via(static_cast<std::size_t>(g.num_vertices()), -1);
    std::vector<int> queue{g.base};
    parent[static_cast<std::size_t>(g.base)] = -1;
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (int d = 0; d < g.p; ++d) {
            int x = g.apply(queue[k], d);
            if (parent[static_cast<std::size_t>(x)] != -2) continue;
            parent[static_cast<std::size_t>(x)] = queue[k];
            via[static_cast<std::size_t>(x)] = d;
            queue.push_back(x);
        }
    for (int v = 0; v < g.num_vertices(); ++v) {
        VertexReport vr;
        vr.index = v;
        std::vector<Digit> path;
        for (int x = v; parent[static_cast<std::size_t>(x)] != -1;
             x = parent[static_cast<std::size_t>(x)])
            path.push_back(via[static_cast<std::size_t>(x)]);
        std::reverse(path.begin(), path.end());
        vr.code = word_to_affine(path, g.p).str();
        for (int q : g.members[static_cast<std::size_t>(v)])
            vr.members.push_back(a.state_names[static_cast<std::size_t>(q)]);
        for (int s = 1; s < g.p; ++s)
            vr.first_terms.push_back(g.alphabet[static_cast<std::size_t>(
                g.first_terms[static_cast<std::size_t>(v)][static_cast<std::size_t>(s - 1)])]);
        for (int d = 0; d < g.p; ++d) vr.edges.push_back(g.apply(v, d));
        r.vertices.push_back(std::move(vr));
    }
    for (const auto& rel : minimal_relations(g, g.base))
        r.base_relations.push_back(make_relation_report(rel.path, g.p));
    return r;
}

inline Json to_json(const KernelReport& r) {
    Json j;
    j["report"] = "kernel";
    j["p"] = r.p;
    j["vertices"] = r.num_vertices;
    j["base"] = r.base;
    j["order"] = r.order;
    j["monoid_order"] = r.monoid_order;
    j["is_group"] = r.is_group;
    Json vs = Json::array();
    for (const auto& v : r.vertices) {
        Json jv;
        jv["index"] = v.index;
        jv["code"] = v.code;
        jv["members"] = v.members;
        jv["first_terms"] = v.first_terms;
        jv["edges"] = v.edges;
        vs.push_back(jv);
    }
    j["vertex_list"] = vs;
    Json rels = Json::array();
    for (const auto& rel : r.base_relations) {
        Json jr;
        jr["type"] = rel.type;
        jr["exponent"] = rel.exponent;
        jr["offset"] = rel.offset;
        jr["word"] = rel.word;
        rels.push_back(jr);
    }
    j["base_relations"] = rels;
    return j;
}

inline void from_json_report(const Json& j, KernelReport& r) {
    r.p = j.at("p").get<int>();
    r.num_vertices = j.at("vertices").get<int>();
    r.base = j.at("base").get<int>();
    r.order = j.at("order").get<std::string>();
    r.monoid_order = j.at("monoid_order").get<int>();
    r.is_group = j.at("is_group").get<bool>();
    for (const auto& jv : j.at("vertex_list")) {
        VertexReport v;
        v.index = jv.at("index").get<int>();
        v.code = jv.at("code").get<std::string>();
        v.members = jv.at("members").get<std::vector<std::string>>();
        v.first_terms = jv.at("first_terms").get<std::vector<std::string>>();
        v.edges = jv.at("edges").get<std::vector<int>>();
        r.vertices.push_back(std::move(v));
    }
    for (const auto& jr : j.at("base_relations")) {
        RelationReport rel;
        rel.type = jr.at("type").get<int>();
        rel.exponent = jr.at("exponent").get<std::string>();
        rel.offset = jr.at("offset").get<std::string>();
        rel.word = jr.at("word").get<std::string>();
        r.base_relations.push_back(std::move(rel));
    }
}

inline std::string render(const KernelReport& r) {
    std::ostringstream out;
    out << "kernel graph: " << r.num_vertices << " vertices, base vertex " << r.base
        << ", order " << r.order << "\n";
    out << "monoid order " << r.monoid_order << (r.is_group ? " (group)" : " (not a group)")
        << "\n";
    for (const auto& v : r.vertices) {
        out << "vertex " << v.index << " " << v.code << "\n";
        out << "  states:";
        for (const auto& mname : v.members) out << " " << mname;
        out << "\n  first terms:";
        for (const auto& t : v.first_terms) out << " " << t;
        out << "\n  edges:";
        for (std::size_t d = 0; d < v.edges.size(); ++d)
            out << " " << d << "->" << v.edges[d];
        out << "\n";
    }
    out << "minimal relations at the base:\n";
    for (const auto& rel : r.base_relations)
        out << "  type " << rel.type << ": pair (" << rel.exponent << ", " << rel.offset
            << "), word " << rel.word << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyReport {
    int p = 0;
    int num_vertices = 0;
    int monoid_order = 0;
    bool r1 = false;
    bool is_group = false;
    bool is_cayley = false;
    bool homogeneous = false;
    bool self_similar = false;
    bool reproduces = false;
    std::vector<RelationReport> global_relations; // one per type that has one
    // witnesses; -1 or empty when unused
    int vertex_missing_base = -1;
    int rel_mismatch_vertex = -1;
    std::string rel_mismatch_word;
    int dissimilar_vertex = -1;
    std::string dissimilar_reason;
    int conflict_vertex = -1;
    std::string conflict_letters;
    // minimality of the source automaton, when its digit maps permute states
    bool dagger_applicable = false;
    bool dagger_holds = false;
    std::string dagger_witness;
    // coset data, when the graph is a labeled Cayley graph
    bool has_cosets = false;
    int group_order = 0;
    int k_order = 0;
    bool core_trivial = false;
    bool natural_labeling = false;
    std::vector<std::string> k_generators;
};

inline ClassifyReport make_classify_report(const Automaton& a, const KernelGraph& g,
                                           const Classification& c) {
    ClassifyReport r;
    r.p = c.p;
    r.num_vertices = c.num_vertices;
    r.monoid_order = c.monoid_order;
    r.r1 = c.r1;
    r.is_group = c.is_group;
    r.is_cayley = c.is_cayley;
    r.homogeneous = c.homogeneous;
    r.self_similar = c.self_similar;
    r.reproduces = c.reproduces;
    for (int t = 0; t < c.p; ++t)
        if (c.relations.has_type[static_cast<std::size_t>(t)])
            r.global_relations.push_back(
                make_relation_report(c.relations.witness[static_cast<std::size_t>(t)], c.p));
    if (c.vertex_missing_base) r.vertex_missing_base = *c.vertex_missing_base;
    if (c.rel_mismatch_vertex) {
        r.rel_mismatch_vertex = *c.rel_mismatch_vertex;
        r.rel_mismatch_word = path_to_string(c.rel_mismatch_word);
    }
    if (c.dissimilar_vertex) {
        r.dissimilar_vertex = *c.dissimilar_vertex;
        r.dissimilar_reason = c.dissimilar_reason;
    }
    if (c.conflict_vertex) {
        r.conflict_vertex = *c.conflict_vertex;
        r.conflict_letters = c.conflict_letters;
    }
    try {
        DaggerResult dag = dagger_check(a);
        r.dagger_applicable = true;
        r.dagger_holds = dag.holds;
        if (dag.witness) r.dagger_witness = *dag.witness;
    } catch (const Error&) {
        r.dagger_applicable = false;
    }
    if (auto cs = coset_structure(g)) {
        r.has_cosets = true;
        r.group_order = cs->group_order;
        r.k_order = cs->k_order;
        r.core_trivial = cs->core_trivial;
        r.natural_labeling = cs->natural_labeling;
        r.k_generators = cs->k_generators;
    }
    return r;
}

inline Json to_json(const ClassifyReport& r) {
    Json j;
    j["report"] = "classify";
    j["p"] = r.p;
    j["vertices"] = r.num_vertices;
    j["monoid_order"] = r.monoid_order;
    j["global_relations_all_types"] = r.r1;
    j["is_group"] = r.is_group;
    j["is_cayley"] = r.is_cayley;
    j["homogeneous"] = r.homogeneous;
    j["self_similar"] = r.self_similar;
    j["reproduces"] = r.reproduces;
    Json rels = Json::array();
    for (const auto& rel : r.global_relations) {
        Json jr;
        jr["type"] = rel.type;
        jr["exponent"] = rel.exponent;
        jr["offset"] = rel.offset;
        jr["word"] = rel.word;
        rels.push_back(jr);
    }
    j["global_relations"] = rels;
    j["vertex_missing_base"] = r.vertex_missing_base;
    j["rel_mismatch_vertex"] = r.rel_mismatch_vertex;
    j["rel_mismatch_word"] = r.rel_mismatch_word;
    j["dissimilar_vertex"] = r.dissimilar_vertex;
    j["dissimilar_reason"] = r.dissimilar_reason;
    j["conflict_vertex"] = r.conflict_vertex;
    j["conflict_letters"] = r.conflict_letters;
    j["dagger_applicable"] = r.dagger_applicable;
    j["dagger_holds"] = r.dagger_holds;
    j["dagger_witness"] = r.dagger_witness;
    j["has_cosets"] = r.has_cosets;
    j["group_order"] = r.group_order;
    j["k_order"] = r.k_order;
    j["core_trivial"] = r.core_trivial;
    j["natural_labeling"] = r.natural_labeling;
    j["k_generators"] = r.k_generators;
    return j;
}

inline void from_json_report(const Json& j, ClassifyReport& r) {
    r.p = j.at("p").get<int>();
    r.num_vertices = j.at("vertices").get<int>();
    r.monoid_order = j.at("monoid_order").get<int>();
    r.r1 = j.at("global_relations_all_types").get<bool>();
    r.is_group = j.at("is_group").get<bool>();
    r.is_cayley = j.at("is_cayley").get<bool>();
    r.homogeneous = j.at("homogeneous").get<bool>();
    r.self_similar = j.at("self_similar").get<bool>();
    r.reproduces = j.at("reproduces").get<bool>();
    for (const auto& jr : j.at("global_relations")) {
        RelationReport rel;
        rel.type = jr.at("type").get<int>();
        rel.exponent = jr.at("exponent").get<std::string>();
        rel.offset = jr.at("offset").get<std::string>();
        rel.word = jr.at("word").get<std::string>();
        r.global_relations.push_back(std::move(rel));
    }
    r.vertex_missing_base = j.at("vertex_missing_base").get<int>();
    r.rel_mismatch_vertex = j.at("rel_mismatch_vertex").get<int>();
    r.rel_mismatch_word = j.at("rel_mismatch_word").get<std::string>();
    r.dissimilar_vertex = j.at("dissimilar_vertex").get<int>();
    r.dissimilar_reason = j.at("dissimilar_reason").get<std::string>();
    r.conflict_vertex = j.at("conflict_vertex").get<int>();
    r.conflict_letters = j.at("conflict_letters").get<std::string>();
    r.dagger_applicable = j.at("dagger_applicable").get<bool>();
    r.dagger_holds = j.at("dagger_holds").get<bool>();
    r.dagger_witness = j.at("dagger_witness").get<std::string>();
    r.has_cosets = j.at("has_cosets").get<bool>();
    r.group_order = j.at("group_order").get<int>();
    r.k_order = j.at("k_order").get<int>();
    r.core_trivial = j.at("core_trivial").get<bool>();
    r.natural_labeling = j.at("natural_labeling").get<bool>();
    r.k_generators = j.at("k_generators").get<std::vector<std::string>>();
}

inline std::string render(const ClassifyReport& r) {
    std::ostringstream out;
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "classification (base " << r.p << ", " << r.num_vertices << " kernel vertices)\n";
    out << "monoid order: " << r.monoid_order << "\n";
    out << "global relations of all types: " << yn(r.r1) << "\n";
    for (const auto& rel : r.global_relations)
        out << "  type " << rel.type << ": pair (" << rel.exponent << ", " << rel.offset
            << "), word " << rel.word << "\n";
    out << "group: " << yn(r.is_group) << "\n";
    out << "cayley graph of its monoid: " << yn(r.is_cayley) << "\n";
    out << "homogeneous: " << yn(r.homogeneous) << "\n";
    if (r.vertex_missing_base >= 0)
        out << "  vertex " << r.vertex_missing_base << " does not reach every vertex\n";
    if (r.rel_mismatch_vertex >= 0)
        out << "  vertex " << r.rel_mismatch_vertex << " disagrees on relation word "
            << r.rel_mismatch_word << "\n";
    out << "self-similar: " << yn(r.self_similar) << "\n";
    if (r.dissimilar_vertex >= 0)
        out << "  vertex " << r.dissimilar_vertex << ": " << r.dissimilar_reason << "\n";
    out << "graph reproduces the sequence: " << yn(r.reproduces) << "\n";
    if (r.conflict_vertex >= 0)
        out << "  vertex " << r.conflict_vertex << " needs letters " << r.conflict_letters
            << "\n";
    if (r.dagger_applicable)
        out << "minimal as a relabeled group automaton: " << yn(r.dagger_holds)
            << (r.dagger_witness.empty() ? "" : " (moved by " + r.dagger_witness + ")") << "\n";
    if (r.has_cosets) {
        out << "letters against cosets: group order " << r.group_order << ", stabilizer order "
            << r.k_order << ", core trivial " << yn(r.core_trivial)
            << ", letters are left cosets " << yn(r.natural_labeling) << "\n";
        out << "  stabilizer generators:";
        for (const auto& k : r.k_generators) out << " " << k;
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// fraction

struct FractionReport {
    int p = 0;
    bool multivariate = false;
    std::vector<std::string> letters;
    std::vector<std::string> var_names;
    // univariate data
    std::vector<Poly> uni_nums;
    Poly uni_den;
    // multivariate data (per letter, shared canonical denominator checked by
    // the caller when it exists; stored per letter to stay general)
    std::vector<MPoly> multi_nums;
    std::vector<MPoly> multi_dens;
};

inline FractionReport make_fraction_report(const KernelGraph& g, bool multivariate,
                                           const CancelToken* cancel = nullptr) {
    FractionReport r;
    r.p = g.p;
    r.multivariate = multivariate;
    r.letters = g.alphabet;
    if (multivariate) {
        r.var_names = mpoly_var_names(g.p);
        MultivariateSolution sol = solve_letter_system(letter_system(g), cancel);
        for (const auto& f : sol.letter) {
            r.multi_nums.push_back(f.num);
            r.multi_dens.push_back(f.den);
        }
    } else {
        r.var_names = {"x"};
        UnivariateSolution sol = solve_letter_system_univariate(g, cancel);
        CommonForm form = common_denominator(sol.letter);
        r.uni_nums = form.nums;
        r.uni_den = form.den;
    }
    return r;
}

inline Json to_json(const FractionReport& r) {
    Json j;
    j["report"] = "fraction";
    j["p"] = r.p;
    j["multivariate"] = r.multivariate;
    j["letters"] = r.letters;
    j["variables"] = r.var_names;
    if (r.multivariate) {
        Json nums = Json::array(), dens = Json::array();
        for (const auto& f : r.multi_nums) nums.push_back(mpoly_to_json(f));
        for (const auto& f : r.multi_dens) dens.push_back(mpoly_to_json(f));
        j["numerators"] = nums;
        j["denominators"] = dens;
    } else {
        Json nums = Json::array();
        for (const auto& f : r.uni_nums) nums.push_back(poly_to_json(f));
        j["numerators"] = nums;
        j["denominator"] = poly_to_json(r.uni_den);
    }
    return j;
}

inline void from_json_report(const Json& j, FractionReport& r) {
    r.p = j.at("p").get<int>();
    r.multivariate = j.at("multivariate").get<bool>();
    r.letters = j.at("letters").get<std::vector<std::string>>();
    r.var_names = j.at("variables").get<std::vector<std::string>>();
    if (r.multivariate) {
        for (const auto& f : j.at("numerators")) r.multi_nums.push_back(mpoly_from_json(f));
        for (const auto& f : j.at("denominators")) r.multi_dens.push_back(mpoly_from_json(f));
    } else {
        for (const auto& f : j.at("numerators")) r.uni_nums.push_back(poly_from_json(f));
        r.uni_den = poly_from_json(j.at("denominator"));
    }
}

inline std::string render(const FractionReport& r) {
    std::ostringstream out;
    out << "letter series in " << (r.multivariate ? "all digit variables" : "one variable")
        << " (base " << r.p << ")\n";
    if (r.multivariate) {
        bool shared = true;
        for (const auto& d : r.multi_dens)
            if (!(d == r.multi_dens.front())) shared = false;
        for (std::size_t c = 0; c < r.letters.size(); ++c)
            out << "numerator[" << r.letters[c] << "]: " << mpoly_str(r.multi_nums[c], r.var_names)
                << "\n";
        if (shared) {
            out << "denominator: " << mpoly_str(r.multi_dens.front(), r.var_names) << "\n";
            out << "L = (";
            for (std::size_t c = 0; c < r.letters.size(); ++c)
                out << (c ? " + " : "") << "(" << mpoly_str(r.multi_nums[c], r.var_names) << ")*"
                    << r.letters[c];
            out << ") / (" << mpoly_str(r.multi_dens.front(), r.var_names) << ")\n";
        } else {
            for (std::size_t c = 0; c < r.letters.size(); ++c)
                out << "denominator[" << r.letters[c] << "]: "
                    << mpoly_str(r.multi_dens[c], r.var_names) << "\n";
        }
    } else {
        for (std::size_t c = 0; c < r.letters.size(); ++c)
            out << "numerator[" << r.letters[c] << "]: " << poly_str(r.uni_nums[c]) << "\n";
        out << "denominator: " << poly_str(r.uni_den) << "\n";
        out << "L = (";
        for (std::size_t c = 0; c < r.letters.size(); ++c)
            out << (c ? " + " : "") << "(" << poly_str(r.uni_nums[c]) << ")*" << r.letters[c];
        out << ") / (" << poly_str(r.uni_den) << ")\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// freq

struct EmpiricalRow {
    std::string letter;
    std::string count;  // exact count among 1..p^n
    double ratio = 0;
    double predicted = 0;
    double error = 0;
};

struct FreqReport {
    int p = 0;
    std::vector<std::string> letters;
    std::vector<Poly> nums;
    Poly den;
    std::vector<std::string> rational_roots; // "value^multiplicity"
    bool rational_roots_complete = false;
    int inv_p_mult = 0;
    int neg_inv_p_mult = 0;
    std::vector<std::string> pair_cosines; // exact cos(theta) per certified pair
    bool hypotheses_ok = false;
    std::string failure;
    std::string kind;
    // per letter exact values as strings; empty when not applicable
    std::vector<std::string> limit_values;
    std::vector<std::string> even_values;
    std::vector<std::string> odd_values;
    std::vector<std::string> mean_values;
    // oscillation terms, flattened per letter
    std::vector<std::vector<double>> term_theta, term_amplitude, term_phase;
    int empirical_n = -1;
    std::vector<EmpiricalRow> empirical;
};

inline FreqReport make_freq_report(const Automaton& a, const KernelGraph& g, double tol,
                                   int empirical_n, const CancelToken* cancel = nullptr) {
    FrequencyReport f = frequency_report(g, tol, cancel);
    FreqReport r;
    r.p = f.p;
    r.letters = f.letters;
    r.nums = f.nums;
    r.den = f.den;
    for (const auto& [root, mult] : f.den_rational_roots)
        r.rational_roots.push_back(rat_str(root) + "^" + std::to_string(mult));
    r.rational_roots_complete = f.rational_roots_complete;
    r.inv_p_mult = f.inv_p_mult;
    r.neg_inv_p_mult = f.neg_inv_p_mult;
    for (const auto& pair : f.pairs) r.pair_cosines.push_back(rat_str(pair.cos_theta));
    r.hypotheses_ok = f.hypotheses_ok;
    r.failure = f.failure;
    r.kind = frequency_kind_name(f.kind);
    for (const auto& lf : f.letter_data) {
        if (f.kind == FrequencyKind::limit) {
            r.limit_values.push_back(rat_str(lf.limit_value));
        } else if (f.kind == FrequencyKind::even_odd) {
            r.even_values.push_back(rat_str(lf.even_value));
            r.odd_values.push_back(rat_str(lf.odd_value));
        } else {
            r.mean_values.push_back(rat_str(lf.mean_value));
            if (f.neg_inv_p_mult > 0) {
                r.even_values.push_back(rat_str(lf.even_value));
                r.odd_values.push_back(rat_str(lf.odd_value));
            }
            std::vector<double> th, am, ph;
            for (const auto& t : lf.terms) {
                th.push_back(t.theta);
                am.push_back(t.amplitude);
                ph.push_back(t.phase);
            }
            r.term_theta.push_back(th);
            r.term_amplitude.push_back(am);
            r.term_phase.push_back(ph);
        }
    }
    if (empirical_n >= 0 && f.hypotheses_ok) {
        r.empirical_n = empirical_n;
        std::vector<BigInt> counts = letter_counts_up_to_power(a, empirical_n);
        double total = std::pow(static_cast<double>(a.p), empirical_n);
        for (std::size_t c = 0; c < r.letters.size(); ++c) {
            EmpiricalRow row;
            row.letter = r.letters[c];
            row.count = counts[c].str();
            row.ratio = counts[c].convert_to<double>() / total;
            const auto& lf = f.letter_data[c];
            if (f.kind == FrequencyKind::limit) {
                row.predicted = rat_double(lf.limit_value);
            } else if (f.kind == FrequencyKind::even_odd) {
                row.predicted =
                    rat_double(empirical_n % 2 == 0 ? lf.even_value : lf.odd_value);
            } else {
                row.predicted = f.neg_inv_p_mult > 0
                                    ? rat_double(empirical_n % 2 == 0 ? lf.even_value
                                                                      : lf.odd_value)
                                    : rat_double(lf.mean_value);
                for (const auto& t : lf.terms)
                    row.predicted += t.amplitude * std::cos(empirical_n * t.theta - t.phase);
            }
            row.error = std::abs(row.ratio - row.predicted);
            r.empirical.push_back(row);
        }
    }
    return r;
}

inline Json to_json(const FreqReport& r) {
    Json j;
    j["report"] = "freq";
    j["p"] = r.p;
    j["letters"] = r.letters;
    Json nums = Json::array();
    for (const auto& f : r.nums) nums.push_back(poly_to_json(f));
    j["numerators"] = nums;
    j["denominator"] = poly_to_json(r.den);
    j["rational_roots"] = r.rational_roots;
    j["rational_roots_complete"] = r.rational_roots_complete;
    j["inv_p_multiplicity"] = r.inv_p_mult;
    j["neg_inv_p_multiplicity"] = r.neg_inv_p_mult;
    j["pair_cosines"] = r.pair_cosines;
    j["hypotheses_ok"] = r.hypotheses_ok;
    j["failure"] = r.failure;
    j["kind"] = r.kind;
    j["limit_values"] = r.limit_values;
    j["even_values"] = r.even_values;
    j["odd_values"] = r.odd_values;
    j["mean_values"] = r.mean_values;
    j["term_theta"] = r.term_theta;
    j["term_amplitude"] = r.term_amplitude;
    j["term_phase"] = r.term_phase;
    j["empirical_n"] = r.empirical_n;
    Json emp = Json::array();
    for (const auto& row : r.empirical) {
        Json je;
        je["letter"] = row.letter;
        je["count"] = row.count;
        je["ratio"] = row.ratio;
        je["predicted"] = row.predicted;
        je["error"] = row.error;
        emp.push_back(je);
    }
    j["empirical"] = emp;
    return j;
}

inline void from_json_report(const Json& j, FreqReport& r) {
    r.p = j.at("p").get<int>();
    r.letters = j.at("letters").get<std::vector<std::string>>();
    for (const auto& f : j.at("numerators")) r.nums.push_back(poly_from_json(f));
    r.den = poly_from_json(j.at("denominator"));
    r.rational_roots = j.at("rational_roots").get<std::vector<std::string>>();
    r.rational_roots_complete = j.at("rational_roots_complete").get<bool>();
    r.inv_p_mult = j.at("inv_p_multiplicity").get<int>();
    r.neg_inv_p_mult = j.at("neg_inv_p_multiplicity").get<int>();
    r.pair_cosines = j.at("pair_cosines").get<std::vector<std::string>>();
    r.hypotheses_ok = j.at("hypotheses_ok").get<bool>();
    r.failure = j.at("failure").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    r.limit_values = j.at("limit_values").get<std::vector<std::string>>();
    r.even_values = j.at("even_values").get<std::vector<std::string>>();
    r.odd_values = j.at("odd_values").get<std::vector<std::string>>();
    r.mean_values = j.at("mean_values").get<std::vector<std::string>>();
    r.term_theta = j.at("term_theta").get<std::vector<std::vector<double>>>();
    r.term_amplitude = j.at("term_amplitude").get<std::vector<std::vector<double>>>();
    r.term_phase = j.at("term_phase").get<std::vector<std::vector<double>>>();
    r.empirical_n = j.at("empirical_n").get<int>();
    for (const auto& je : j.at("empirical")) {
        EmpiricalRow row;
        row.letter = je.at("letter").get<std::string>();
        row.count = je.at("count").get<std::string>();
        row.ratio = je.at("ratio").get<double>();
        row.predicted = je.at("predicted").get<double>();
        row.error = je.at("error").get<double>();
        r.empirical.push_back(std::move(row));
    }
}

inline std::string render(const FreqReport& r) {
    std::ostringstream out;
    out << "frequency along powers of " << r.p << "\n";
    for (std::size_t c = 0; c < r.letters.size(); ++c)
        out << "numerator[" << r.letters[c] << "]: " << poly_str(r.nums[c]) << "\n";
    out << "denominator: " << poly_str(r.den) << "\n";
    if (r.rational_roots_complete) {
        out << "rational roots:";
        if (r.rational_roots.empty()) out << " none";
        for (const auto& root : r.rational_roots) out << " " << root;
        out << "\n";
    } else {
        out << "rational roots: not enumerated (coefficients too large)\n";
    }
    out << "multiplicity at 1/" << r.p << ": " << r.inv_p_mult << ", at -1/" << r.p << ": "
        << r.neg_inv_p_mult << "\n";
    for (const auto& ct : r.pair_cosines)
        out << "conjugate pair on the circle with cos(theta) = " << ct << "\n";
    if (!r.hypotheses_ok) {
        out << "hypotheses violated: " << r.failure << "\n";
        return out.str();
    }
    out << "verdict: " << r.kind << "\n";
    if (r.kind == "limit") {
        for (std::size_t c = 0; c < r.letters.size(); ++c)
            out << "  " << r.letters[c] << ": limit " << r.limit_values[c] << "\n";
    } else if (r.kind == "even_odd") {
        for (std::size_t c = 0; c < r.letters.size(); ++c)
            out << "  " << r.letters[c] << ": even " << r.even_values[c] << ", odd "
                << r.odd_values[c] << "\n";
    } else {
        for (std::size_t c = 0; c < r.letters.size(); ++c) {
            out << "  " << r.letters[c] << ": mean " << r.mean_values[c];
            if (!r.even_values.empty())
                out << ", even part " << r.even_values[c] << ", odd part " << r.odd_values[c];
            for (std::size_t t = 0; t < r.term_theta[c].size(); ++t)
                out << ", + " << double_str(r.term_amplitude[c][t]) << "*cos(n*"
                    << double_str(r.term_theta[c][t]) << " - " << double_str(r.term_phase[c][t])
                    << ")";
            out << "\n";
        }
    }
    if (r.empirical_n >= 0) {
        out << "empirical at n = " << r.empirical_n << " (counts among 1.." << r.p << "^"
            << r.empirical_n << ")\n";
        for (const auto& row : r.empirical)
            out << "  " << row.letter << ": count " << row.count << ", ratio "
                << double_str(row.ratio) << ", predicted " << double_str(row.predicted)
                << ", error " << double_str(row.error) << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// emitted automata (corpus, from-group)

struct EmitReport {
    std::string source; // corpus name or constructed description
    std::string text;   // canonical automaton file
};

inline Json to_json(const EmitReport& r) {
    Json j;
    j["report"] = "automaton";
    j["source"] = r.source;
    j["text"] = r.text;
    return j;
}

inline void from_json_report(const Json& j, EmitReport& r) {
    r.source = j.at("source").get<std::string>();
    r.text = j.at("text").get<std::string>();
}

inline std::string render(const EmitReport& r) { return r.text; }

} // namespace autoseq
