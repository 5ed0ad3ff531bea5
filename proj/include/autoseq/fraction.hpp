// SPDX-License-Identifier: Apache-2.0
//
// Generating fractions for the letter indicator series of an automatic
// sequence.  Write each index n >= 1 in base p, least significant digit
// first, and let l_d(n) count occurrences of digit d.  For a letter c the
// series sums x0^l_0(n) * ... * x_{p-1}^l_{p-1}(n) over all n with a_n = c.
// On the kernel graph this satisfies a linear system with matrix I - M,
// where M[u][v] collects one variable x_d per edge u -> v labelled d, and
// right-hand side C[u] collects x_s for every digit s >= 1 whose one-digit
// index at u produces the letter.  The solution is a rational function; this
// file computes it exactly, in all p variables and in the one-variable
// specialization x_d := x.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autoseq/error.hpp"
#include "autoseq/kernel.hpp"
#include "autoseq/poly.hpp"
#include "autoseq/rational.hpp"

namespace autoseq {

// ---------------------------------------------------------------------------
// System assembly.

struct LetterSystem {
    int p = 0;
    int n = 0;           // vertices
    int letters = 0;     // alphabet size of the graph labels
    int base = 0;        // solve row of interest
    std::vector<std::vector<MPoly>> A; // n x n, equals I - M
    std::vector<std::vector<MPoly>> C; // n x letters
};

inline LetterSystem letter_system(const KernelGraph& g) {
    LetterSystem sys;
    sys.p = g.p;
    sys.n = g.num_vertices();
    sys.letters = static_cast<int>(g.alphabet.size());
    sys.base = g.base;
    sys.A.assign(static_cast<std::size_t>(sys.n),
                 std::vector<MPoly>(static_cast<std::size_t>(sys.n), MPoly(sys.p)));
    sys.C.assign(static_cast<std::size_t>(sys.n),
                 std::vector<MPoly>(static_cast<std::size_t>(sys.letters), MPoly(sys.p)));
    for (int u = 0; u < sys.n; ++u) {
        sys.A[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] =
            MPoly::constant(sys.p, 1);
        for (int d = 0; d < sys.p; ++d) {
            int v = g.gen[static_cast<std::size_t>(d)][static_cast<std::size_t>(u)];
            auto& cell = sys.A[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            cell = cell - MPoly::variable(sys.p, d);
        }
        for (int s = 1; s < sys.p; ++s) {
            int letter = g.first_terms[static_cast<std::size_t>(u)][static_cast<std::size_t>(s - 1)];
            auto& cell = sys.C[static_cast<std::size_t>(u)][static_cast<std::size_t>(letter)];
            cell = cell + MPoly::variable(sys.p, s);
        }
    }
    return sys;
}

// ---------------------------------------------------------------------------
// Fractions and canonical forms.

struct MFraction {
    MPoly num, den;
};

struct UFraction {
    Poly num, den;
};

// scale so the denominator has coprime integer coefficients with positive
// leading coefficient; numerator follows along (value unchanged)
inline void canonicalize(MFraction& f) {
    if (f.den.is_zero()) throw Error("fractions", "zero denominator");
    BigRat s = integer_normalizer(f.den);
    if (f.den.leading_term().second < 0) s = -s;
    f.num = f.num * s;
    f.den = f.den * s;
}

// divide out the polynomial gcd first, then normalize as above
inline void canonicalize(UFraction& f) {
    if (f.den.is_zero()) throw Error("fractions", "zero denominator");
    Poly g = poly_gcd(f.num, f.den);
    if (g.degree() > 0) {
        f.num = poly_div_exact(f.num, g);
        f.den = poly_div_exact(f.den, g);
    }
    BigRat s = integer_normalizer(f.den);
    if (f.den.leading() < 0) s = -s;
    f.num = f.num * s;
    f.den = f.den * s;
}

inline bool exact_equal(const MFraction& a, const MFraction& b) {
    return a.num * b.den == b.num * a.den;
}
inline bool exact_equal(const UFraction& a, const UFraction& b) {
    return a.num * b.den == b.num * a.den;
}

// the rational s with a.num == b.num*s and a.den == b.den*s, when one exists
inline std::optional<BigRat> representation_scalar(const MFraction& a, const MFraction& b) {
    if (a.den.is_zero() || b.den.is_zero()) return std::nullopt;
    BigRat s = a.den.leading_term().second / b.den.leading_term().second;
    if (a.num == b.num * s && a.den == b.den * s) return s;
    return std::nullopt;
}
inline std::optional<BigRat> representation_scalar(const UFraction& a, const UFraction& b) {
    if (a.den.is_zero() || b.den.is_zero()) return std::nullopt;
    BigRat s = a.den.leading() / b.den.leading();
    if (a.num == b.num * s && a.den == b.den * s) return s;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Multivariate solve: one-step fraction-free Gauss-Jordan elimination.  The
// divisions are exact determinant identities; mpoly_div_exact throws if that
// is ever violated, and the caller re-verifies the solution by substitution.

struct MultivariateSolution {
    std::vector<MFraction> letter; // indexed by graph letter
    MPoly determinant;             // common pre-reduction denominator
};

inline MultivariateSolution solve_letter_system(const LetterSystem& sys,
                                                const CancelToken* cancel = nullptr) {
    const int n = sys.n;
    const int m = sys.letters;
    if (n > 32) throw SizeError("fractions", "kernel graph too large for exact elimination");
    std::vector<std::vector<MPoly>> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        w[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n + m));
        for (int j = 0; j < n; ++j)
            w[static_cast<std::size_t>(i)].push_back(
                sys.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        for (int j = 0; j < m; ++j)
            w[static_cast<std::size_t>(i)].push_back(
                sys.C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    MPoly prev = MPoly::constant(sys.p, 1);
    for (int k = 0; k < n; ++k) {
        poll_cancel(cancel);
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (!w[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error("fractions", "singular letter system");
        if (piv != k) std::swap(w[static_cast<std::size_t>(piv)], w[static_cast<std::size_t>(k)]);
        const MPoly pivot = w[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            poll_cancel(cancel);
            MPoly factor = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            for (int j = 0; j < n + m; ++j) {
                if (j == k) continue;
                MPoly t = pivot * w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                          factor * w[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    mpoly_div_exact(t, prev);
            }
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = MPoly(sys.p);
        }
        prev = pivot;
    }
    const MPoly det = w[0][0]; // every final diagonal entry equals the determinant
    for (int i = 1; i < n; ++i)
        if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != det)
            throw Error("fractions", "elimination self-check failed");
    MultivariateSolution out;
    out.determinant = det;
    out.letter.resize(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
        MFraction f{w[static_cast<std::size_t>(sys.base)][static_cast<std::size_t>(n + c)], det};
        canonicalize(f);
        out.letter[static_cast<std::size_t>(c)] = std::move(f);
    }
    // independent verification: substitute back into the defining system
    std::vector<MFraction> x(static_cast<std::size_t>(n * m));
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < m; ++c)
            x[static_cast<std::size_t>(i * m + c)] =
                MFraction{w[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + c)], det};
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < m; ++c) {
            poll_cancel(cancel);
            MPoly lhs(sys.p); // sum_j A[i][j] * num_j, all over common den
            for (int j = 0; j < n; ++j)
                lhs = lhs + sys.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                                x[static_cast<std::size_t>(j * m + c)].num;
            if (lhs != sys.C[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] * det)
                throw Error("fractions", "elimination self-check failed");
        }
    return out;
}

// ---------------------------------------------------------------------------
// Univariate solve: classical Gaussian elimination over the field of
// rational functions, every entry kept fully reduced.

namespace detail {

struct RatFun {
    Poly num, den{BigRat(1)};

    void reduce() {
        if (den.is_zero()) throw Error("fractions", "zero denominator");
        if (num.is_zero()) {
            den = Poly(BigRat(1));
            return;
        }
        Poly g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = poly_div_exact(num, g);
            den = poly_div_exact(den, g);
        }
        BigRat lead = den.leading();
        if (lead != 1) {
            std::vector<BigRat> cn = num.coeffs(), cd = den.coeffs();
            for (auto& v : cn) v /= lead;
            for (auto& v : cd) v /= lead;
            num = Poly(std::move(cn));
            den = Poly(std::move(cd));
        }
    }
    bool is_zero() const { return num.is_zero(); }
};

inline RatFun rf_add(const RatFun& a, const RatFun& b) {
    RatFun r{a.num * b.den + b.num * a.den, a.den * b.den};
    r.reduce();
    return r;
}
inline RatFun rf_sub(const RatFun& a, const RatFun& b) {
    RatFun r{a.num * b.den - b.num * a.den, a.den * b.den};
    r.reduce();
    return r;
}
inline RatFun rf_mul(const RatFun& a, const RatFun& b) {
    RatFun r{a.num * b.num, a.den * b.den};
    r.reduce();
    return r;
}
inline RatFun rf_div(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw Error("fractions", "division by zero rational function");
    RatFun r{a.num * b.den, a.den * b.num};
    r.reduce();
    return r;
}

} // namespace detail

struct UnivariateSolution {
    std::vector<UFraction> letter;
};

inline UnivariateSolution solve_letter_system_univariate(const KernelGraph& g,
                                                         const CancelToken* cancel = nullptr) {
    using detail::RatFun;
    const int n = g.num_vertices();
    const int p = g.p;
    const int m = static_cast<int>(g.alphabet.size());
    if (n > 256) throw SizeError("fractions", "kernel graph too large for exact elimination");
    // A[u][v] = number of digits d with t_d(u) = v; entries of I - x*A
    std::vector<std::vector<RatFun>> w(
        static_cast<std::size_t>(n),
        std::vector<RatFun>(static_cast<std::size_t>(n + m), RatFun{Poly(), Poly(BigRat(1))}));
    for (int u = 0; u < n; ++u) {
        w[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)].num = Poly(BigRat(1));
        for (int d = 0; d < p; ++d) {
            int v = g.gen[static_cast<std::size_t>(d)][static_cast<std::size_t>(u)];
            auto& cell = w[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            cell.num = cell.num - Poly::x();
        }
        for (int s = 1; s < p; ++s) {
            int c = g.first_terms[static_cast<std::size_t>(u)][static_cast<std::size_t>(s - 1)];
            auto& cell = w[static_cast<std::size_t>(u)][static_cast<std::size_t>(n + c)];
            cell.num = cell.num + Poly::x();
        }
    }
    for (int k = 0; k < n; ++k) {
        poll_cancel(cancel);
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (!w[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error("fractions", "singular letter system");
        if (piv != k) std::swap(w[static_cast<std::size_t>(piv)], w[static_cast<std::size_t>(k)]);
        RatFun pivot = w[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int j = k; j < n + m; ++j)
            w[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                detail::rf_div(w[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)], pivot);
        for (int i = 0; i < n; ++i) {
            if (i == k || w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero())
                continue;
            poll_cancel(cancel);
            RatFun f = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            for (int j = k; j < n + m; ++j)
                w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = detail::rf_sub(
                    w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                    detail::rf_mul(f, w[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]));
        }
    }
    // verification: multiply the original system by the solution
    std::vector<std::vector<RatFun>> orig(
        static_cast<std::size_t>(n),
        std::vector<RatFun>(static_cast<std::size_t>(n), RatFun{Poly(), Poly(BigRat(1))}));
    for (int u = 0; u < n; ++u) {
        orig[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)].num = Poly(BigRat(1));
        for (int d = 0; d < p; ++d) {
            int v = g.gen[static_cast<std::size_t>(d)][static_cast<std::size_t>(u)];
            orig[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)].num =
                orig[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)].num - Poly::x();
        }
    }
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < m; ++c) {
            RatFun acc{Poly(), Poly(BigRat(1))};
            for (int j = 0; j < n; ++j)
                acc = detail::rf_add(
                    acc, detail::rf_mul(orig[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                                        w[static_cast<std::size_t>(j)][static_cast<std::size_t>(n + c)]));
            int rhs = 0;
            for (int s = 1; s < p; ++s)
                if (g.first_terms[static_cast<std::size_t>(i)][static_cast<std::size_t>(s - 1)] == c)
                    ++rhs;
            RatFun want{Poly::x() * BigRat(rhs), Poly(BigRat(1))};
            if (!detail::rf_sub(acc, want).is_zero())
                throw Error("fractions", "elimination self-check failed");
        }
    UnivariateSolution out;
    out.letter.resize(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
        const RatFun& cell = w[static_cast<std::size_t>(g.base)][static_cast<std::size_t>(n + c)];
        UFraction f{cell.num, cell.den};
        canonicalize(f);
        out.letter[static_cast<std::size_t>(c)] = std::move(f);
    }
    return out;
}

// substitute x_d := x for every digit variable
inline UFraction specialize(const MFraction& f) {
    UFraction u{f.num.specialize_to_univariate(), f.den.specialize_to_univariate()};
    canonicalize(u);
    return u;
}

// ---------------------------------------------------------------------------
// Common-denominator form for a family of reduced fractions; used by the
// frequency analysis, which needs one shared denominator.

struct CommonForm {
    std::vector<Poly> nums;
    Poly den;
};

inline CommonForm common_denominator(const std::vector<UFraction>& fractions) {
    if (fractions.empty()) throw Error("fractions", "empty fraction family");
    Poly den(BigRat(1));
    for (const auto& f : fractions) {
        Poly g = poly_gcd(den, f.den);
        den = g.degree() > 0 ? poly_div_exact(den, g) * f.den : den * f.den;
    }
    BigRat s = integer_normalizer(den);
    if (den.leading() < 0) s = -s;
    den = den * s;
    CommonForm out;
    out.den = den;
    for (const auto& f : fractions) out.nums.push_back(f.num * poly_div_exact(den, f.den));
    return out;
}

// ---------------------------------------------------------------------------
// Series extraction.  The coefficient of x^k in a letter fraction counts the
// indices with exactly k base-p digits mapped to that letter; the running
// sums therefore count occurrences among 1 .. p^k - 1.

struct SeriesCounts {
    std::vector<BigInt> per_length;   // k = 1..n_max
    std::vector<BigInt> cumulative;   // counts among 1..p^k-1
};

inline SeriesCounts series_counts(const UFraction& f, int n_max) {
    if (f.den.is_zero() || f.den[0] == 0)
        throw Error("fractions", "denominator must be invertible at the origin");
    if (!f.num.is_zero() && f.num[0] != 0)
        throw Error("fractions", "letter series must have no constant term");
    if (n_max < 0) throw Error("fractions", "series length must be nonnegative");
    std::vector<BigRat> s(static_cast<std::size_t>(n_max) + 1, BigRat(0));
    const BigRat d0 = f.den[0];
    for (int k = 0; k <= n_max; ++k) {
        BigRat acc = f.num[k];
        for (int j = 1; j <= std::min(k, f.den.degree()); ++j)
            acc -= f.den[j] * s[static_cast<std::size_t>(k - j)];
        s[static_cast<std::size_t>(k)] = acc / d0;
    }
    SeriesCounts out;
    BigInt run = 0;
    for (int k = 1; k <= n_max; ++k) {
        const BigRat& v = s[static_cast<std::size_t>(k)];
        if (!is_integer(v) || v < 0)
            throw Error("fractions", "series coefficients must be nonnegative integers");
        BigInt c = rat_num(v);
        out.per_length.push_back(c);
        run += c;
        out.cumulative.push_back(run);
    }
    return out;
}

} // namespace autoseq
