// SPDX-License-Identifier: Apache-2.0
//
// Letter frequency analysis.  With L_c = P_c / D over a common denominator,
// the ratio count(c, p^n) / p^n is governed by the roots of D on the circle
// of radius 1/p: each simple root a there contributes P_c(a) / D'(a) / (a^2
// - a) times e^{-i n theta}.  The analysis requires two hypotheses: every
// root of D has modulus at least 1/p, and the roots of modulus exactly 1/p
// are simple.  Roots at 1/p and -1/p are handled exactly; an irrational
// conjugate pair on the circle is certified exactly through a gcd with the
// scaled reversal (if |a| = 1/p then the conjugate of a equals 1/(p^2 a), so
// circle roots are common roots of D(x) and x^deg D(1/(p^2 x)) scaled to a
// polynomial).  Everything that cannot be certified exactly falls back to
// numeric roots with a tolerance, and anything within the tolerance of the
// circle that lacks a certificate is refused rather than guessed.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autoseq/automaton.hpp"
#include "autoseq/error.hpp"
#include "autoseq/fraction.hpp"
#include "autoseq/kernel.hpp"
#include "autoseq/poly.hpp"
#include "autoseq/rational.hpp"

namespace autoseq {

// ---------------------------------------------------------------------------
// Numeric roots (companion matrix, one Newton polish).

inline std::vector<std::complex<double>> numeric_roots(const Poly& f) {
    int d = f.degree();
    if (d < 1) return {};
    if (d > 256) throw SizeError("frequency", "denominator degree too large");
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    double lead = rat_double(f.leading());
    for (int k = 0; k < d; ++k) {
        companion(k, d - 1) = -rat_double(f[k]) / lead;
        if (k > 0) companion(k, k - 1) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
    std::vector<std::complex<double>> roots;
    const Poly df = f.derivative();
    for (int k = 0; k < d; ++k) {
        std::complex<double> z = solver.eigenvalues()(k);
        for (int it = 0; it < 2; ++it) {
            std::complex<double> fv = 0, dv = 0;
            for (int j = f.degree(); j >= 0; --j) fv = fv * z + rat_double(f[j]);
            for (int j = df.degree(); j >= 0; --j) dv = dv * z + rat_double(df[j]);
            if (std::abs(dv) > 1e-14) z -= fv / dv;
        }
        roots.push_back(z);
    }
    return roots;
}

// ---------------------------------------------------------------------------
// Exact circle-root certificate.

// coefficients c_j replaced by c_{d-j} * (p^2)^j; roots map to 1/(p^2 root)
inline Poly scaled_reversal(const Poly& f, int p) {
    int d = f.degree();
    std::vector<BigRat> c(static_cast<std::size_t>(d) + 1);
    BigRat scale = 1;
    const BigRat p2(p * p);
    for (int j = 0; j <= d; ++j) {
        c[static_cast<std::size_t>(j)] = f[d - j] * scale;
        scale *= p2;
    }
    return Poly(std::move(c));
}

struct CirclePair {
    BigRat cos_theta;  // exact; the pair is (cos t + i sin t)/p and conjugate
    Poly quadratic;    // monic factor of the denominator carrying the pair
    int multiplicity = 1;
};

struct CircleCertificate {
    int inv_p_mult = 0;      // multiplicity of the root 1/p
    int neg_inv_p_mult = 0;  // multiplicity of the root -1/p
    std::vector<CirclePair> pairs;
    Poly off_circle;         // squarefree, certified or numerically checked off the circle
};

namespace detail {

inline int divide_out_root(Poly& f, const BigRat& r) {
    Poly lin(std::vector<BigRat>{-r, 1});
    int mult = 0;
    while (!f.is_zero() && f.eval(r) == 0) {
        f = poly_div_exact(f, lin);
        ++mult;
    }
    return mult;
}

} // namespace detail

// Analyzes one squarefree polynomial; multiplicities are attached by the
// caller.  tol guards the numeric fallback for candidates the gcd step
// cannot settle exactly.
inline CircleCertificate circle_certificate(const Poly& squarefree, int p, double tol) {
    CircleCertificate cert;
    Poly f = squarefree * integer_normalizer(squarefree);
    const BigRat inv_p(1, p);
    cert.inv_p_mult = detail::divide_out_root(f, inv_p);
    cert.neg_inv_p_mult = detail::divide_out_root(f, -inv_p);
    if (f.degree() < 1) {
        cert.off_circle = f;
        return cert;
    }
    Poly h = poly_gcd(f, scaled_reversal(f, p));
    const BigRat inv_p2(1, p * p);
    if (h.degree() == 2 && h[0] == inv_p2) {
        BigRat disc = h[1] * h[1] - BigRat(4) * h[0];
        if (disc < 0) {
            CirclePair pair;
            pair.cos_theta = -h[1] * BigRat(p) / 2;
            pair.quadratic = h;
            cert.pairs.push_back(pair);
            f = poly_div_exact(f, h);
        }
    } else if (h.degree() >= 3) {
        // cannot split the candidates exactly; refuse anything near the circle
        for (const auto& z : numeric_roots(h))
            if (std::abs(std::abs(z) - 1.0 / p) <= tol)
                throw Error("frequency",
                            "root modulus too close to 1/p to classify; adjust tolerance");
    }
    cert.off_circle = f;
    return cert;
}

// ---------------------------------------------------------------------------
// Full report.

enum class FrequencyKind { limit, even_odd, oscillation };

inline std::string frequency_kind_name(FrequencyKind k) {
    switch (k) {
        case FrequencyKind::limit: return "limit";
        case FrequencyKind::even_odd: return "even_odd";
        default: return "oscillation";
    }
}

struct OscillationTerm {
    double theta = 0;      // angle of the circle root, in (0, pi)
    double amplitude = 0;  // contributes amplitude * cos(n*theta - phase)
    double phase = 0;
};

struct LetterFrequency {
    std::string letter;
    BigRat limit_value{0};              // kind limit
    BigRat even_value{0}, odd_value{0}; // kind even_odd
    BigRat mean_value{0};               // kind oscillation: exact part from 1/p
    std::vector<OscillationTerm> terms; // kind oscillation
};

struct FrequencyReport {
    int p = 0;
    std::vector<std::string> letters;
    std::vector<Poly> nums;
    Poly den;
    std::vector<std::pair<BigRat, int>> den_rational_roots; // when enumeration feasible
    bool rational_roots_complete = false;
    int inv_p_mult = 0;
    int neg_inv_p_mult = 0;
    std::vector<CirclePair> pairs;
    bool hypotheses_ok = false;
    std::string failure; // first violated hypothesis, human readable
    FrequencyKind kind = FrequencyKind::limit;
    std::vector<LetterFrequency> letter_data;
};

namespace detail {

// residue contribution of letter c at a simple circle root
inline BigRat circle_coefficient(const Poly& num, const Poly& den, const BigRat& alpha) {
    BigRat dprime = den.derivative().eval(alpha);
    if (dprime == 0) throw Error("frequency", "circle root is not simple");
    return num.eval(alpha) / dprime / (alpha * alpha - alpha);
}

inline std::complex<double> eval_complex(const Poly& f, std::complex<double> z) {
    std::complex<double> v = 0;
    for (int j = f.degree(); j >= 0; --j) v = v * z + rat_double(f[j]);
    return v;
}

} // namespace detail

inline FrequencyReport frequency_report(const KernelGraph& g, double tol = 1e-9,
                                        const CancelToken* cancel = nullptr) {
    FrequencyReport rep;
    rep.p = g.p;
    rep.letters = g.alphabet;
    UnivariateSolution sol = solve_letter_system_univariate(g, cancel);
    CommonForm form = common_denominator(sol.letter);
    rep.nums = form.nums;
    rep.den = form.den;
    poll_cancel(cancel);
    if (rep.den.eval(BigRat(1, g.p)) != 0)
        throw Error("frequency", "common denominator must vanish at 1/p");
    try {
        rep.den_rational_roots = rational_roots(rep.den);
        rep.rational_roots_complete = true;
    } catch (const SizeError&) {
        rep.rational_roots_complete = false;
    }

    // per squarefree factor: exact circle structure plus its multiplicity
    std::vector<SquarefreeFactor> factors = squarefree_decomposition(rep.den);
    Poly off_circle(BigRat(1));
    std::string simple_failure;
    for (const auto& [factor, mult] : factors) {
        poll_cancel(cancel);
        CircleCertificate cert = circle_certificate(factor, g.p, tol);
        rep.inv_p_mult += cert.inv_p_mult * mult;
        rep.neg_inv_p_mult += cert.neg_inv_p_mult * mult;
        for (auto pair : cert.pairs) {
            pair.multiplicity = mult;
            rep.pairs.push_back(pair);
        }
        if (mult > 1 && (cert.inv_p_mult > 0 || cert.neg_inv_p_mult > 0 || !cert.pairs.empty()))
            simple_failure = "a root of modulus 1/p is not simple";
        if (cert.off_circle.degree() > 0) off_circle = off_circle * cert.off_circle;
    }

    // hypothesis: no root strictly inside the circle of radius 1/p
    std::string modulus_failure;
    for (const auto& z : numeric_roots(off_circle)) {
        double m = std::abs(z);
        if (std::abs(m - 1.0 / g.p) <= tol)
            throw Error("frequency",
                        "root modulus too close to 1/p to classify; adjust tolerance");
        if (m < 1.0 / g.p)
            modulus_failure = "a denominator root has modulus below 1/p";
    }
    if (rep.rational_roots_complete)
        for (const auto& [r, mult] : rep.den_rational_roots)
            if (r != 0 && boost::multiprecision::abs(r) < BigRat(1, g.p))
                modulus_failure = "a denominator root has modulus below 1/p";

    if (!modulus_failure.empty() || !simple_failure.empty()) {
        rep.hypotheses_ok = false;
        rep.failure = !modulus_failure.empty() ? modulus_failure : simple_failure;
        return rep;
    }
    rep.hypotheses_ok = true;

    const BigRat inv_p(1, g.p);
    const int m = static_cast<int>(rep.letters.size());
    if (rep.neg_inv_p_mult == 0 && rep.pairs.empty())
        rep.kind = FrequencyKind::limit;
    else if (rep.pairs.empty())
        rep.kind = FrequencyKind::even_odd;
    else
        rep.kind = FrequencyKind::oscillation;

    BigRat sum_even = 0, sum_odd = 0;
    for (int c = 0; c < m; ++c) {
        LetterFrequency lf;
        lf.letter = rep.letters[static_cast<std::size_t>(c)];
        const Poly& num = rep.nums[static_cast<std::size_t>(c)];
        BigRat at_inv_p = detail::circle_coefficient(num, rep.den, inv_p);
        if (rep.kind == FrequencyKind::limit) {
            lf.limit_value = at_inv_p;
            sum_even += at_inv_p;
            sum_odd += at_inv_p;
        } else if (rep.kind == FrequencyKind::even_odd) {
            BigRat at_neg = detail::circle_coefficient(num, rep.den, -inv_p);
            lf.even_value = at_inv_p + at_neg;
            lf.odd_value = at_inv_p - at_neg;
            sum_even += lf.even_value;
            sum_odd += lf.odd_value;
        } else {
            lf.mean_value = at_inv_p;
            if (rep.neg_inv_p_mult > 0) {
                BigRat at_neg = detail::circle_coefficient(num, rep.den, -inv_p);
                lf.even_value = at_inv_p + at_neg;
                lf.odd_value = at_inv_p - at_neg;
            }
            for (const auto& pair : rep.pairs) {
                double ct = rat_double(pair.cos_theta);
                double theta = std::acos(std::max(-1.0, std::min(1.0, ct)));
                std::complex<double> alpha(ct / g.p,
                                           std::sin(theta) / g.p);
                std::complex<double> cval = detail::eval_complex(num, alpha) /
                                            detail::eval_complex(rep.den.derivative(), alpha) /
                                            (alpha * alpha - alpha);
                OscillationTerm term;
                term.theta = theta;
                term.amplitude = 2.0 * std::abs(cval);
                term.phase = std::arg(cval);
                lf.terms.push_back(term);
            }
        }
        rep.letter_data.push_back(std::move(lf));
    }
    if (rep.kind != FrequencyKind::oscillation && (sum_even != 1 || sum_odd != 1))
        throw Error("frequency", "letter frequencies do not sum to one");
    return rep;
}

// ---------------------------------------------------------------------------
// Empirical counts: occurrences of each letter among indices 1 .. p^n,
// computed by dynamic programming over digit strings, never by enumeration.

inline std::vector<BigInt> letter_counts_up_to_power(const Automaton& a, int n) {
    if (n < 0) throw Error("frequency", "exponent must be nonnegative");
    if (n > 100000) throw SizeError("frequency", "exponent too large");
    const int q = a.num_states();
    const int p = a.p;
    std::vector<BigInt> counts(a.alphabet.size(), BigInt(0));
    // walk[s] = number of digit strings of the current length ending at s,
    // digits fed least significant first, all digits free
    std::vector<BigInt> walk(static_cast<std::size_t>(q), BigInt(0));
    walk[static_cast<std::size_t>(a.initial)] = 1;
    for (int len = 1; len <= n; ++len) {
        // strings whose final digit is nonzero correspond to len-digit indices
        std::vector<BigInt> ended(static_cast<std::size_t>(q), BigInt(0));
        std::vector<BigInt> next(static_cast<std::size_t>(q), BigInt(0));
        for (int s = 0; s < q; ++s) {
            if (walk[static_cast<std::size_t>(s)] == 0) continue;
            for (int d = 0; d < p; ++d) {
                int t = a.delta[static_cast<std::size_t>(s)][static_cast<std::size_t>(d)];
                next[static_cast<std::size_t>(t)] += walk[static_cast<std::size_t>(s)];
                if (d != 0)
                    ended[static_cast<std::size_t>(t)] += walk[static_cast<std::size_t>(s)];
            }
        }
        for (int s = 0; s < q; ++s)
            counts[static_cast<std::size_t>(a.labels[static_cast<std::size_t>(s)])] +=
                ended[static_cast<std::size_t>(s)];
        walk = std::move(next);
    }
    // include the index p^n itself (digits: n zeros then a one)
    if (n >= 1) {
        int s = a.initial;
        for (int k = 0; k < n; ++k) s = a.delta[static_cast<std::size_t>(s)][0];
        s = a.delta[static_cast<std::size_t>(s)][1];
        counts[static_cast<std::size_t>(a.labels[static_cast<std::size_t>(s)])] += 1;
    } else {
        counts[static_cast<std::size_t>(
            a.labels[static_cast<std::size_t>(a.delta[static_cast<std::size_t>(a.initial)][1])])] += 1;
    }
    return counts;
}

} // namespace autoseq
