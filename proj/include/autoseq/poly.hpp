// SPDX-License-Identifier: Apache-2.0
//
// Exact polynomials over the rationals: dense univariate and sparse
// multivariate in graded lexicographic order.  Everything here is plain
// value semantics; sizes stay small (matrices over a handful of vertices).
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "autoseq/error.hpp"
#include "autoseq/rational.hpp"

namespace autoseq {

// ---------------------------------------------------------------------------
// Univariate.

class Poly {
public:
    Poly() = default;
    explicit Poly(BigRat constant) {
        if (constant != 0) c_.push_back(std::move(constant));
    }
    explicit Poly(std::vector<BigRat> ascending) : c_(std::move(ascending)) { trim(); }

    static Poly x() { return Poly(std::vector<BigRat>{0, 1}); }
    static Poly monomial(int deg, BigRat coeff) {
        std::vector<BigRat> c(static_cast<std::size_t>(deg) + 1, BigRat(0));
        c.back() = std::move(coeff);
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }

    const BigRat& operator[](int k) const {
        static const BigRat zero{0};
        if (k < 0 || k > degree()) return zero;
        return c_[static_cast<std::size_t>(k)];
    }

    const std::vector<BigRat>& coeffs() const { return c_; }

    const BigRat& leading() const {
        if (is_zero()) throw Error("fractions", "zero polynomial has no leading coefficient");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<BigRat> c(std::max(a.c_.size(), b.c_.size()), BigRat(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<BigRat> c(std::max(a.c_.size(), b.c_.size()), BigRat(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a) { return Poly(BigRat(0)) - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<BigRat> c(a.c_.size() + b.c_.size() - 1, BigRat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const BigRat& s) { return a * Poly(s); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    BigRat eval(const BigRat& v) const {
        BigRat r = 0;
        for (std::size_t k = c_.size(); k-- > 0;) r = r * v + c_[k];
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<BigRat> c(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * BigRat(static_cast<int>(k));
        return Poly(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigRat> c_; // ascending degree, trimmed
};

// quotient and remainder over the field of rationals
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("fractions", "polynomial division by zero");
    Poly r = a;
    std::vector<BigRat> q(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)),
                          BigRat(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        BigRat f = r.leading() / b.leading();
        int shift = r.degree() - b.degree();
        q[static_cast<std::size_t>(shift)] = f;
        r = r - Poly::monomial(shift, f) * b;
    }
    return {Poly(std::move(q)), r};
}

inline Poly poly_div_exact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw Error("fractions", "inexact polynomial division");
    return q;
}

// monic gcd
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    std::vector<BigRat> c = a.coeffs();
    BigRat lead = a.leading();
    for (auto& v : c) v /= lead;
    return Poly(std::move(c));
}

// smallest positive rational multiplier making all coefficients integral and
// coprime; used for canonical forms
inline BigRat integer_normalizer(const Poly& a) {
    if (a.is_zero()) return BigRat(1);
    BigInt lcm_den = 1, gcd_num = 0;
    for (const auto& v : a.coeffs()) {
        if (v == 0) continue;
        BigInt d = rat_den(v);
        lcm_den = lcm_den / int_gcd(lcm_den, d) * d;
    }
    for (const auto& v : a.coeffs()) {
        if (v == 0) continue;
        BigInt n = boost::multiprecision::abs(rat_num(v) * (lcm_den / rat_den(v)));
        gcd_num = int_gcd(gcd_num, n);
    }
    return BigRat(lcm_den, gcd_num);
}

// Yun's squarefree decomposition: f = lc * prod factors[k].first ^
// factors[k].second with each factor monic squarefree and pairwise coprime.
struct SquarefreeFactor {
    Poly factor;
    int multiplicity = 1;
};

inline std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& f) {
    if (f.is_zero()) throw Error("frequency", "zero polynomial has no factorization");
    if (f.degree() == 0) return {};
    Poly g0 = poly_gcd(f, f.derivative());
    Poly b = poly_div_exact(f, g0);
    Poly c = poly_div_exact(f.derivative(), g0);
    Poly d = c - b.derivative();
    std::vector<SquarefreeFactor> out;
    int i = 1;
    while (b.degree() > 0) {
        Poly a = poly_gcd(b, d);
        if (a.degree() > 0) out.push_back({a, i});
        b = poly_div_exact(b, a);
        c = poly_div_exact(d, a);
        d = c - b.derivative();
        ++i;
        if (i > f.degree() + 1) throw Error("frequency", "squarefree decomposition diverged");
    }
    return out;
}

inline std::vector<BigInt> divisors(const BigInt& n0) {
    BigInt n = boost::multiprecision::abs(n0);
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All rational roots of f, with multiplicity, by candidate enumeration over
// divisors of the (integer-normalized) extreme coefficients.  Exact and
// complete; intended for the small denominators arising here.
inline std::vector<std::pair<BigRat, int>> rational_roots(const Poly& f0) {
    if (f0.is_zero()) throw Error("frequency", "zero polynomial has every root");
    std::vector<std::pair<BigRat, int>> out;
    Poly f = f0 * integer_normalizer(f0);
    // strip x^k
    int zero_mult = 0;
    while (!f.is_zero() && f[0] == 0) {
        f = poly_div_exact(f, Poly::x());
        ++zero_mult;
    }
    if (zero_mult > 0) out.emplace_back(BigRat(0), zero_mult);
    if (f.degree() < 1) return out;
    BigInt a0 = rat_num(f[0]);
    BigInt an = rat_num(f.leading());
    if (boost::multiprecision::abs(a0) > BigInt(1000000000000LL) ||
        boost::multiprecision::abs(an) > BigInt(1000000000000LL))
        throw SizeError("frequency", "extreme coefficients too large for root enumeration");
    for (const BigInt& r : divisors(a0))
        for (const BigInt& s : divisors(an)) {
            if (int_gcd(r, s) != 1) continue;
            for (int sign : {1, -1}) {
                BigRat cand(r * sign, s);
                if (f.eval(cand) != 0) continue;
                int mult = 0;
                Poly lin(std::vector<BigRat>{-cand, 1});
                Poly g = f;
                for (;;) {
                    auto [q, rem] = poly_divmod(g, lin);
                    if (!rem.is_zero()) break;
                    g = q;
                    ++mult;
                }
                out.emplace_back(cand, mult);
            }
        }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// ---------------------------------------------------------------------------
// Multivariate, graded lexicographic (x0 > x1 > ...).

struct GradedLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        // same degree: a < b when a is lexicographically smaller
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != b[k]) return a[k] < b[k];
        return false;
    }
};

class MPoly {
public:
    MPoly() = default;
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, const BigRat& v) {
        MPoly p(nvars);
        if (v != 0) p.terms_[std::vector<int>(static_cast<std::size_t>(nvars), 0)] = v;
        return p;
    }
    static MPoly variable(int nvars, int i) {
        MPoly p(nvars);
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.terms_[std::move(e)] = 1;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, BigRat, GradedLex>& terms() const { return terms_; }

    int total_degree() const {
        if (is_zero()) return -1;
        int d = 0;
        for (int e : terms_.rbegin()->first) d += e;
        return d;
    }

    const std::pair<const std::vector<int>, BigRat>& leading_term() const {
        if (is_zero()) throw Error("fractions", "zero polynomial has no leading term");
        return *terms_.rbegin();
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, v] : b.terms_) r.add_term(e, v);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, v] : b.terms_) r.add_term(e, -v);
        return r;
    }
    friend MPoly operator-(const MPoly& a) { return MPoly(a.nvars_) - a; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.nvars_);
        for (const auto& [ea, va] : a.terms_)
            for (const auto& [eb, vb] : b.terms_) {
                std::vector<int> e(ea.size());
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, va * vb);
            }
        return r;
    }
    friend MPoly operator*(const MPoly& a, const BigRat& s) {
        return a * MPoly::constant(a.nvars_, s);
    }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    BigRat eval(const std::vector<BigRat>& at) const {
        BigRat r = 0;
        for (const auto& [e, v] : terms_) {
            BigRat t = v;
            for (std::size_t k = 0; k < e.size(); ++k)
                for (int rep = 0; rep < e[k]; ++rep) t *= at[k];
            r += t;
        }
        return r;
    }

    // substitute every variable by the same univariate x
    Poly specialize_to_univariate() const {
        std::vector<BigRat> c;
        for (const auto& [e, v] : terms_) {
            int d = 0;
            for (int k : e) d += k;
            if (static_cast<int>(c.size()) <= d) c.resize(static_cast<std::size_t>(d) + 1, BigRat(0));
            c[static_cast<std::size_t>(d)] += v;
        }
        return Poly(std::move(c));
    }

private:
    void add_term(const std::vector<int>& e, const BigRat& v) {
        if (v == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, v);
        } else {
            it->second += v;
            if (it->second == 0) terms_.erase(it);
        }
    }
    int nvars_ = 0;
    std::map<std::vector<int>, BigRat, GradedLex> terms_;
};

inline MPoly monomial_of(int nvars, const std::vector<int>& e, const BigRat& coeff = BigRat(1)) {
    MPoly p = MPoly::constant(nvars, coeff);
    for (std::size_t k = 0; k < e.size(); ++k)
        for (int rep = 0; rep < e[k]; ++rep)
            p = p * MPoly::variable(nvars, static_cast<int>(k));
    return p;
}

// Exact division by leading-term peeling; when a = q*b this always succeeds
// because the graded-lex leading term is multiplicative.  Throws otherwise,
// which doubles as a correctness check inside fraction-free elimination.
inline MPoly mpoly_div_exact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw Error("fractions", "polynomial division by zero");
    MPoly r = a;
    MPoly q(a.nvars());
    const auto& [eb, vb] = b.leading_term();
    while (!r.is_zero()) {
        const auto& [er, vr] = r.leading_term();
        std::vector<int> e(er.size());
        for (std::size_t k = 0; k < e.size(); ++k) {
            e[k] = er[k] - eb[k];
            if (e[k] < 0) throw Error("fractions", "inexact polynomial division");
        }
        MPoly t = monomial_of(a.nvars(), e, vr / vb);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

inline BigRat integer_normalizer(const MPoly& a) {
    if (a.is_zero()) return BigRat(1);
    BigInt lcm_den = 1, gcd_num = 0;
    for (const auto& [e, v] : a.terms()) {
        BigInt d = rat_den(v);
        lcm_den = lcm_den / int_gcd(lcm_den, d) * d;
    }
    for (const auto& [e, v] : a.terms()) {
        BigInt n = boost::multiprecision::abs(rat_num(v) * (lcm_den / rat_den(v)));
        gcd_num = int_gcd(gcd_num, n);
    }
    return BigRat(lcm_den, gcd_num);
}

// ---------------------------------------------------------------------------
// Printing.  Terms in decreasing degree, explicit '^', omitted unit
// coefficients: "-x^2 + 3/2*x - 1", "2*x0^2*x3 - x1".

inline std::string rat_coeff_str(const BigRat& v, bool lead, bool with_mono) {
    std::string sign = lead ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + ");
    BigRat av = v < 0 ? BigRat(-v) : v;
    if (with_mono && av == 1) return sign;
    return sign + rat_str(av) + (with_mono ? "*" : "");
}

inline std::string poly_str(const Poly& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool lead = true;
    for (int k = f.degree(); k >= 0; --k) {
        const BigRat& v = f[k];
        if (v == 0) continue;
        out << rat_coeff_str(v, lead, k > 0);
        if (k > 0) {
            out << var;
            if (k > 1) out << "^" << k;
        }
        lead = false;
    }
    return out.str();
}

// variable names: x,y for two variables, else x0,x1,...
inline std::vector<std::string> mpoly_var_names(int nvars) {
    if (nvars == 2) return {"x", "y"};
    std::vector<std::string> names;
    for (int k = 0; k < nvars; ++k) names.push_back("x" + std::to_string(k));
    return names;
}

inline std::string mpoly_str(const MPoly& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool lead = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, v] = *it;
        bool has_mono = false;
        for (int k : e)
            if (k > 0) has_mono = true;
        out << rat_coeff_str(v, lead, has_mono);
        bool first = true;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!first) out << "*";
            out << names[k];
            if (e[k] > 1) out << "^" << e[k];
            first = false;
        }
        lead = false;
    }
    return out.str();
}

} // namespace autoseq
