#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qeuler {

// Arbitrary-precision signed integer.  Everything exact in this library sits
// on top of this single alias; swapping the backend (e.g. for a GMP-backed
// type) is a one-line change here.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

// base^exp for exp >= 0.
inline BigInt big_pow(const BigInt& base, long exp) {
    BigInt r = 1;
    BigInt b = base;
    for (long e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

} // namespace qeuler
