// SPDX-License-Identifier: Apache-2.0
//
// Command line front end.  Subcommands mirror the library pipeline; every
// report prints as text or as JSON that regenerates the same text.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "autoseq/automaton.hpp"
#include "autoseq/classify.hpp"
#include "autoseq/corpus.hpp"
#include "autoseq/error.hpp"
#include "autoseq/fraction.hpp"
#include "autoseq/frequency.hpp"
#include "autoseq/group.hpp"
#include "autoseq/kernel.hpp"
#include "autoseq/permutation.hpp"
#include "autoseq/report.hpp"

namespace {

autoseq::Automaton load_input(const std::string& input) {
    if (std::filesystem::exists(input)) {
        std::ifstream in(input);
        if (!in) throw autoseq::Error("cli", "cannot read " + input);
        std::stringstream buf;
        buf << in.rdbuf();
        return autoseq::parse_automaton(buf.str());
    }
    try {
        return autoseq::corpus(input);
    } catch (const autoseq::Error&) {
        throw autoseq::Error("cli", "input is neither a readable file nor a corpus name: " +
                                        input);
    }
}

autoseq::VertexOrder order_of(const std::string& name) {
    if (name == "bfs") return autoseq::VertexOrder::bfs;
    if (name == "labels") return autoseq::VertexOrder::labels;
    throw autoseq::Error("cli", "order must be bfs or labels");
}

// "A..B" or a single index
std::pair<autoseq::BigInt, autoseq::BigInt> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            autoseq::BigInt n(text);
            return {n, n};
        }
        return {autoseq::BigInt(text.substr(0, dots)), autoseq::BigInt(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw autoseq::Error("cli", "cannot parse index range: " + text);
    }
}

// semicolon-separated cycle words over a common point set
std::vector<autoseq::Permutation> parse_generators(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    int degree = 0;
    for (const auto& part : parts) {
        std::string numtext;
        for (char ch : part) {
            if (ch >= '0' && ch <= '9') {
                numtext += ch;
            } else {
                if (!numtext.empty()) degree = std::max(degree, std::stoi(numtext));
                numtext.clear();
            }
        }
        if (!numtext.empty()) degree = std::max(degree, std::stoi(numtext));
    }
    if (degree == 0) throw autoseq::Error("cli", "no points in the generator list");
    std::vector<autoseq::Permutation> gens;
    for (const auto& part : parts) gens.push_back(autoseq::parse_cycles(part, degree));
    return gens;
}

template <typename Report>
int emit(const Report& r, const std::string& format) {
    if (format == "json") {
        std::cout << autoseq::to_json(r).dump(2) << "\n";
    } else {
        std::cout << autoseq::render(r);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of base-p automatic sequences"};
    app.require_subcommand(1);

    std::string input, format = "text", order = "bfs", range = "1..32";
    std::string gens_text, k_text, corpus_name;
    double tol = 1e-9;
    int empirical = -1;
    bool multivariate = false;

    auto add_common = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input)
            cmd->add_option("input", input, "automaton file or corpus name")->required();
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* c_validate = app.add_subcommand("validate", "parse a file and echo canonical form");
    add_common(c_validate);
    auto* c_eval = app.add_subcommand("eval", "print sequence terms");
    add_common(c_eval);
    c_eval->add_option("--n", range, "index or inclusive range A..B (1-based)");
    auto* c_kernel = app.add_subcommand("kernel", "print the kernel graph");
    add_common(c_kernel);
    c_kernel->add_option("--order", order, "vertex order: bfs or labels")
        ->check(CLI::IsMember({"bfs", "labels"}));
    auto* c_classify = app.add_subcommand("classify", "classify the sequence");
    add_common(c_classify);
    c_classify->add_option("--order", order, "vertex order: bfs or labels")
        ->check(CLI::IsMember({"bfs", "labels"}));
    auto* c_fraction = app.add_subcommand("fraction", "print the letter series fractions");
    add_common(c_fraction);
    c_fraction->add_option("--order", order, "vertex order: bfs or labels")
        ->check(CLI::IsMember({"bfs", "labels"}));
    c_fraction->add_flag("--multivariate", multivariate, "keep one variable per digit");
    auto* c_freq = app.add_subcommand("freq", "letter frequency along powers of p");
    add_common(c_freq);
    c_freq->add_option("--order", order, "vertex order: bfs or labels")
        ->check(CLI::IsMember({"bfs", "labels"}));
    c_freq->add_option("--tol", tol, "numeric tolerance for root moduli");
    c_freq->add_option("--empirical", empirical, "compare against exact counts at p^N");
    auto* c_from_group = app.add_subcommand("from-group", "emit the automaton of a group");
    add_common(c_from_group, false);
    c_from_group
        ->add_option("--gens", gens_text, "digit generators, cycles separated by ';'")
        ->required();
    c_from_group->add_option("--K", k_text, "generators of the label subgroup K");
    auto* c_corpus = app.add_subcommand("corpus", "emit a built-in automaton");
    c_corpus->add_option("name", corpus_name, "corpus entry, empty lists all names");
    c_corpus->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_validate->parsed()) {
            return emit(autoseq::make_validate_report(load_input(input)), format);
        }
        if (c_eval->parsed()) {
            auto [from, to] = parse_range(range);
            return emit(autoseq::make_eval_report(load_input(input), from, to), format);
        }
        if (c_kernel->parsed()) {
            autoseq::Automaton a = load_input(input);
            autoseq::KernelGraph g = autoseq::build_kernel_graph(a, order_of(order));
            return emit(autoseq::make_kernel_report(a, g, order_of(order)), format);
        }
        if (c_classify->parsed()) {
            autoseq::Automaton a = load_input(input);
            autoseq::KernelGraph g = autoseq::build_kernel_graph(a, order_of(order));
            return emit(autoseq::make_classify_report(a, g, autoseq::classify(g)), format);
        }
        if (c_fraction->parsed()) {
            autoseq::Automaton a = load_input(input);
            autoseq::KernelGraph g = autoseq::build_kernel_graph(a, order_of(order));
            return emit(autoseq::make_fraction_report(g, multivariate), format);
        }
        if (c_freq->parsed()) {
            autoseq::Automaton a = load_input(input);
            autoseq::KernelGraph g = autoseq::build_kernel_graph(a, order_of(order));
            return emit(autoseq::make_freq_report(a, g, tol, empirical), format);
        }
        if (c_from_group->parsed()) {
            std::vector<autoseq::Permutation> gens = parse_generators(gens_text);
            autoseq::PermGroup G = autoseq::PermGroup::generate(gens);
            std::vector<int> digit_gens;
            for (const auto& g : gens) digit_gens.push_back(G.element_index(g));
            std::vector<int> K{0};
            if (!k_text.empty()) {
                std::vector<int> seed{0};
                for (const auto& k : parse_generators(k_text)) {
                    autoseq::Permutation ext = k;
                    ext.img.resize(gens[0].img.size());
                    for (std::size_t x = k.img.size(); x < ext.img.size(); ++x)
                        ext.img[x] = static_cast<int>(x);
                    if (!G.contains(ext))
                        throw autoseq::Error("cli", "K generator is not an element of G");
                    seed.push_back(G.element_index(ext));
                }
                K = autoseq::subgroup_closure(G, seed);
            }
            autoseq::Automaton a = autoseq::cayley_automaton(G, digit_gens, K);
            autoseq::EmitReport r;
            r.source = "from-group";
            r.text = autoseq::serialize_automaton(a);
            return emit(r, format);
        }
        if (c_corpus->parsed()) {
            if (corpus_name.empty()) {
                for (const auto& name : autoseq::corpus_names()) std::cout << name << "\n";
                return 0;
            }
            autoseq::EmitReport r;
            r.source = corpus_name;
            r.text = autoseq::serialize_automaton(autoseq::corpus(corpus_name));
            return emit(r, format);
        }
        std::cerr << "usage error: no subcommand\n";
        return 2;
    } catch (const autoseq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 1;
    }
}
