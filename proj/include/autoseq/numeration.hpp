// SPDX-License-Identifier: Apache-2.0
//
// Base-p numeration, least significant digit first, for sequences indexed
// from 1, plus the calculus of codes [p^i X + j].
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "autoseq/error.hpp"
#include "autoseq/rational.hpp"

namespace autoseq {

using Digit = int;

inline void check_base(int p) {
    if (p < 2) throw Error("core", "base must be >= 2, got " + std::to_string(p));
}

// Digits of n in base p, least significant first; the final digit is
// nonzero.  n <= 0 is rejected: sequences start at index 1, and every
// operation in this library treats index 0 as a hard error.
inline std::vector<Digit> digits_lsb(std::int64_t n, int p) {
    check_base(p);
    if (n <= 0)
        throw Error("core", "sequence index must be >= 1, got " + std::to_string(n));
    std::vector<Digit> d;
    while (n > 0) {
        d.push_back(static_cast<Digit>(n % p));
        n /= p;
    }
    return d;
}

inline std::vector<Digit> digits_lsb(const BigInt& n, int p) {
    check_base(p);
    if (n <= 0) throw Error("core", "sequence index must be >= 1, got " + n.str());
    std::vector<Digit> d;
    BigInt m = n;
    while (m > 0) {
        d.push_back(static_cast<Digit>(m % p));
        m /= p;
    }
    return d;
}

inline BigInt value_of_digits(const std::vector<Digit>& lsb_first, int p) {
    check_base(p);
    BigInt n = 0;
    for (std::size_t k = lsb_first.size(); k-- > 0;) {
        if (lsb_first[k] < 0 || lsb_first[k] >= p)
            throw Error("core", "digit out of range for base " + std::to_string(p));
        n = n * p + lsb_first[k];
    }
    return n;
}

struct NumerationStats {
    int length = 0;                        // number of base-p digits of n
    std::vector<std::int64_t> digit_count; // occurrences of each digit, size p
};

inline NumerationStats numeration_stats(std::int64_t n, int p) {
    NumerationStats s;
    s.digit_count.assign(static_cast<std::size_t>(p), 0);
    for (Digit d : digits_lsb(n, p)) {
        ++s.digit_count[static_cast<std::size_t>(d)];
        ++s.length;
    }
    return s;
}

// A code [p^i X + j] with 0 <= j < p^i.  word() is j written in base p and
// left padded with zeros to exactly i digits, the form codes are printed
// in.  path() contains the same digits least significant first, which is
// the order automaton arrows are followed in.
class AffineCode {
public:
    AffineCode() = default; // the identity code [X]

    AffineCode(int exponent, BigInt offset, int base)
        : exponent_(exponent), offset_(std::move(offset)), base_(base) {
        check_base(base_);
        if (exponent_ < 0) throw Error("core", "code exponent must be >= 0");
        if (offset_ < 0 || offset_ >= int_pow(base_, static_cast<unsigned>(exponent_)))
            throw Error("core", "code offset must satisfy 0 <= j < p^i");
    }

    int exponent() const { return exponent_; }
    const BigInt& offset() const { return offset_; }
    int base() const { return base_; }

    bool is_identity() const { return exponent_ == 0; }

    std::vector<Digit> path() const {
        std::vector<Digit> d(static_cast<std::size_t>(exponent_), 0);
        BigInt m = offset_;
        for (int k = 0; k < exponent_ && m > 0; ++k) {
            d[static_cast<std::size_t>(k)] = static_cast<Digit>(m % base_);
            m /= base_;
        }
        return d;
    }

    std::string word() const {
        std::vector<Digit> p = path();
        std::string w;
        for (std::size_t k = p.size(); k-- > 0;) {
            if (base_ <= 10) {
                w.push_back(static_cast<char>('0' + p[k]));
            } else {
                if (!w.empty()) w.push_back('.');
                w += std::to_string(p[k]);
            }
        }
        return w;
    }

    // "[4X+3]", "[X]"
    std::string str() const {
        if (is_identity()) return "[X]";
        std::string s = "[";
        s += int_pow(base_, static_cast<unsigned>(exponent_)).str();
        s += "X";
        if (offset_ > 0) {
            s += "+";
            s += offset_.str();
        }
        s += "]";
        return s;
    }

private:
    int exponent_ = 0;
    BigInt offset_ = 0;
    int base_ = 2;
};

inline AffineCode word_to_affine(const std::vector<Digit>& path, int p) {
    check_base(p);
    BigInt j = 0, pw = 1;
    for (Digit d : path) {
        if (d < 0 || d >= p)
            throw Error("core", "digit out of range for base " + std::to_string(p));
        j += pw * d;
        pw *= p;
    }
    return AffineCode(static_cast<int>(path.size()), j, p);
}

// Leftmost digit of the code word; defined only for nonidentity codes.
inline Digit relation_type(const AffineCode& c) {
    if (c.is_identity())
        throw Error("core", "the identity code has no relation type");
    BigInt top = c.offset() / int_pow(c.base(), static_cast<unsigned>(c.exponent() - 1));
    return static_cast<Digit>(top);
}

inline Digit relation_type(int i, const BigInt& j, int p) {
    return relation_type(AffineCode(i, j, p));
}

} // namespace autoseq
