// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "autoseq/corpus.hpp"
#include "autoseq/frequency.hpp"
#include "oracles.hpp"

using namespace autoseq;

namespace {

Poly from_coeffs(std::vector<BigRat> ascending) { return Poly(std::move(ascending)); }

// a_n = (number of base-2 digits of n) mod 3; both digit maps advance the
// same three-cycle, so the counts per letter cycle with period three and the
// ratios oscillate instead of converging
Automaton digit_length_mod3() {
    Automaton a;
    a.p = 2;
    a.alphabet = {"r0", "r1", "r2"};
    a.state_names = {"s0", "s1", "s2"};
    a.labels = {0, 1, 2};
    a.delta = {{1, 1}, {2, 2}, {0, 0}};
    a.initial = 0;
    validate(a);
    return a;
}

} // namespace

TEST_CASE("numeric root finding") {
    Poly f = from_coeffs({-6, 1, 1}); // (x+3)(x-2)
    auto roots = numeric_roots(f);
    REQUIRE(roots.size() == 2);
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.real() < b.real(); });
    CHECK(std::abs(roots[0] - std::complex<double>(-3, 0)) < 1e-9);
    CHECK(std::abs(roots[1] - std::complex<double>(2, 0)) < 1e-9);
    CHECK(numeric_roots(Poly(BigRat(5))).empty());
    CHECK(numeric_roots(Poly()).empty());
    CHECK_THROWS_AS(numeric_roots(Poly::monomial(257, BigRat(1)) + Poly(BigRat(1))), SizeError);

    // conjugate pair of 4x^2+2x+1 sits at modulus 1/2
    for (const auto& z : numeric_roots(from_coeffs({1, 2, 4})))
        CHECK(std::abs(std::abs(z) - 0.5) < 1e-12);
}

TEST_CASE("scaled reversal maps roots to conjugates on the circle") {
    Poly f = from_coeffs({5, 3, 1});
    CHECK(scaled_reversal(f, 2) == from_coeffs({1, 12, 80}));
    // roots r map to 1/(p^2 r)
    Poly g = from_coeffs({BigRat(1, 8), BigRat(-3, 4), 1}); // (x-1/2)(x-1/4)
    Poly rev = scaled_reversal(g, 2);
    CHECK(rev.eval(BigRat(1, 2)) == 0);
    CHECK(rev.eval(BigRat(1)) == 0);
}

TEST_CASE("circle certificates") {
    SECTION("rational roots on the circle") {
        CircleCertificate cert = circle_certificate(from_coeffs({-1, 0, 4}), 2, 1e-9);
        CHECK(cert.inv_p_mult == 1);
        CHECK(cert.neg_inv_p_mult == 1);
        CHECK(cert.pairs.empty());
        CHECK(cert.off_circle.degree() < 1);
    }
    SECTION("no circle roots at all") {
        CircleCertificate cert = circle_certificate(from_coeffs({1, 0, 2}), 2, 1e-9);
        CHECK(cert.inv_p_mult == 0);
        CHECK(cert.neg_inv_p_mult == 0);
        CHECK(cert.pairs.empty());
        CHECK(cert.off_circle == from_coeffs({1, 0, 2}));
    }
    SECTION("an exact irrational pair") {
        Poly quad = from_coeffs({BigRat(1, 4), BigRat(1, 2), 1});
        Poly f = quad * from_coeffs({-3, 1});
        CircleCertificate cert = circle_certificate(f, 2, 1e-9);
        CHECK(cert.inv_p_mult == 0);
        REQUIRE(cert.pairs.size() == 1);
        CHECK(cert.pairs[0].cos_theta == BigRat(-1, 2));
        CHECK(cert.pairs[0].quadratic == quad);
        // input is scaled to integer coefficients (by 4) before splitting
        CHECK(cert.off_circle == from_coeffs({-12, 4}));
    }
    SECTION("two pairs cannot be split exactly and are refused") {
        Poly f = from_coeffs({BigRat(1, 4), BigRat(1, 2), 1}) *
                 from_coeffs({BigRat(1, 4), BigRat(-1, 2), 1});
        CHECK_THROWS_AS(circle_certificate(f, 2, 1e-9), Error);
    }
}

TEST_CASE("parity ratios converge to one half") {
    FrequencyReport rep = frequency_report(build_kernel_graph(corpus("thue_morse")));
    CHECK(rep.p == 2);
    CHECK(rep.letters == std::vector<std::string>{"A", "B"});
    CHECK(rep.den == from_coeffs({-1, 2}));
    CHECK(rep.rational_roots_complete);
    REQUIRE(rep.den_rational_roots.size() == 1);
    CHECK(rep.den_rational_roots[0] == std::make_pair(BigRat(1, 2), 1));
    CHECK(rep.inv_p_mult == 1);
    CHECK(rep.neg_inv_p_mult == 0);
    CHECK(rep.pairs.empty());
    CHECK(rep.hypotheses_ok);
    CHECK(rep.kind == FrequencyKind::limit);
    REQUIRE(rep.letter_data.size() == 2);
    CHECK(rep.letter_data[0].limit_value == BigRat(1, 2));
    CHECK(rep.letter_data[1].limit_value == BigRat(1, 2));
    CHECK(frequency_kind_name(rep.kind) == "limit");
}

TEST_CASE("six-letter residue sequence: every letter tends to one sixth") {
    FrequencyReport rep = frequency_report(build_kernel_graph(corpus("apery_mod7")));
    CHECK(rep.p == 7);
    CHECK(rep.hypotheses_ok);
    CHECK(rep.kind == FrequencyKind::limit);
    CHECK(rep.inv_p_mult == 1);
    CHECK(rep.neg_inv_p_mult == 0);
    CHECK(rep.pairs.empty());
    REQUIRE(rep.letter_data.size() == 6);
    for (const auto& lf : rep.letter_data) CHECK(lf.limit_value == BigRat(1, 6));
    // rational roots: -1/3 and 1/7 only
    REQUIRE(rep.den_rational_roots.size() == 2);
    CHECK(rep.den_rational_roots[0] == std::make_pair(BigRat(-1, 3), 1));
    CHECK(rep.den_rational_roots[1] == std::make_pair(BigRat(1, 7), 1));
}

TEST_CASE("eight-letter sequence alternates between even and odd indices") {
    FrequencyReport rep = frequency_report(build_kernel_graph(corpus("quaternion_fig3")));
    CHECK(rep.hypotheses_ok);
    CHECK(rep.kind == FrequencyKind::even_odd);
    CHECK(rep.den == from_coeffs({-1, 0, 2, 0, 8}));
    CHECK(rep.inv_p_mult == 1);
    CHECK(rep.neg_inv_p_mult == 1);
    CHECK(rep.pairs.empty());
    REQUIRE(rep.letter_data.size() == 8);
    // letters d1, d4, d5, d8 hold 1/12 of even prefixes and 1/6 of odd ones;
    // the other four letters swap the two values
    for (int c : {0, 3, 4, 7}) {
        CHECK(rep.letter_data[static_cast<std::size_t>(c)].even_value == BigRat(1, 12));
        CHECK(rep.letter_data[static_cast<std::size_t>(c)].odd_value == BigRat(1, 6));
    }
    for (int c : {1, 2, 5, 6}) {
        CHECK(rep.letter_data[static_cast<std::size_t>(c)].even_value == BigRat(1, 6));
        CHECK(rep.letter_data[static_cast<std::size_t>(c)].odd_value == BigRat(1, 12));
    }
    CHECK(frequency_kind_name(rep.kind) == "even_odd");
}

TEST_CASE("digit-length counter oscillates with period three") {
    Automaton a = digit_length_mod3();
    KernelGraph g = build_kernel_graph(a);
    REQUIRE(g.num_vertices() == 3);
    FrequencyReport rep = frequency_report(g);
    CHECK(rep.hypotheses_ok);
    CHECK(rep.kind == FrequencyKind::oscillation);
    CHECK(rep.den == from_coeffs({-1, 0, 0, 8}));
    CHECK(rep.inv_p_mult == 1);
    CHECK(rep.neg_inv_p_mult == 0);
    REQUIRE(rep.pairs.size() == 1);
    CHECK(rep.pairs[0].cos_theta == BigRat(-1, 2));
    CHECK(rep.pairs[0].multiplicity == 1);

    const double theta = std::acos(-0.5);
    REQUIRE(rep.letter_data.size() == 3);
    for (const auto& lf : rep.letter_data) {
        CHECK(lf.mean_value == BigRat(1, 3));
        REQUIRE(lf.terms.size() == 1);
        CHECK(std::abs(lf.terms[0].theta - theta) < 1e-12);
        CHECK(lf.terms[0].amplitude > 0.0);
    }

    // the oscillating prediction tracks the true ratios
    for (int n : {10, 11, 12, 13}) {
        auto counts = letter_counts_up_to_power(a, n);
        double total = std::pow(2.0, n);
        for (std::size_t c = 0; c < counts.size(); ++c) {
            const auto& lf = rep.letter_data[c];
            double predicted = rat_double(lf.mean_value);
            for (const auto& t : lf.terms)
                predicted += t.amplitude * std::cos(n * t.theta - t.phase);
            double actual = counts[c].convert_to<double>() / total;
            CHECK(std::abs(actual - predicted) < 5e-3);
        }
    }
    CHECK(frequency_kind_name(rep.kind) == "oscillation");
}

TEST_CASE("counting by dynamic programming equals enumeration") {
    for (const char* name : {"thue_morse", "quaternion_fig3", "dihedral_square"}) {
        Automaton a = corpus(name);
        for (int n : {0, 1, 5, 10}) {
            auto dp = letter_counts_up_to_power(a, n);
            auto brute = oracles::brute_counts(a, 1LL << n);
            REQUIRE(dp.size() == brute.size());
            for (std::size_t c = 0; c < dp.size(); ++c)
                CHECK(dp[c] == BigInt(brute[c]));
        }
    }
    Automaton ap = corpus("apery_mod7");
    for (int n : {1, 3}) {
        std::int64_t limit = 1;
        for (int k = 0; k < n; ++k) limit *= 7;
        auto dp = letter_counts_up_to_power(ap, n);
        auto brute = oracles::brute_counts(ap, limit);
        for (std::size_t c = 0; c < dp.size(); ++c) CHECK(dp[c] == BigInt(brute[c]));
    }
    CHECK_THROWS_AS(letter_counts_up_to_power(corpus("thue_morse"), -1), Error);
    CHECK_THROWS_AS(letter_counts_up_to_power(corpus("thue_morse"), 200000), SizeError);
}

TEST_CASE("large exponents stay exact") {
    // 2^200 overflows doubles and every machine integer; the digit counts
    // must still be exact integers summing to 2^200
    auto counts = letter_counts_up_to_power(corpus("thue_morse"), 200);
    BigInt total = counts[0] + counts[1];
    BigInt expect = 1;
    for (int k = 0; k < 200; ++k) expect *= 2;
    CHECK(total == expect);
}
