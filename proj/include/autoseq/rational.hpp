// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace autoseq {

// All sequence-level arithmetic is exact.  Floating point only ever enters
// through the numeric root finder, and every value it produces is either
// certified exactly afterwards or reported with an explicit tolerance.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const BigRat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const BigRat& q) { return rat_den(q) == 1; }

// "5", "-3/7"
inline std::string rat_str(const BigRat& q) { return q.str(); }

inline double rat_double(const BigRat& q) { return q.convert_to<double>(); }

inline BigInt int_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline BigInt int_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

} // namespace autoseq
