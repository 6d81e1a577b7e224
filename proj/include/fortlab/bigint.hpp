#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <stdexcept>

namespace fortlab {

/* Counts are exact arbitrary-precision integers. 64 bits is not enough:
   the rounded cycle form already needs ~97 bits at n = 200. */
using BigInt = boost::multiprecision::cpp_int;

/* 50 decimal digits (~166-bit mantissa) for the plastic-ratio powers, far
   beyond the 80-bit minimum the rounding guard assumes. */
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline BigInt ipow(BigInt base, unsigned long long e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace fortlab
