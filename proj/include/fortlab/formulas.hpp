#pragma once
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace fortlab {

/* Third-order recurrences x_n = x_{n-2} + x_{n-3} behind the cycle and
   path minimal-fort counts, plus their closed rounded forms driven by the
   plastic ratio psi (real root of t^3 - t - 1). Counts are exact BigInts;
   floating point only ever chooses between two adjacent integers, guarded
   against ambiguity. */

inline BigInt perrin(long long n) {
    if (n < 0) throw std::invalid_argument("perrin: negative index");
    BigInt a = 3, b = 0, c = 2;  /* x0, x1, x2 */
    if (n == 0) return a;
    if (n == 1) return b;
    if (n == 2) return c;
    for (long long i = 3; i <= n; ++i) {
        BigInt next = b + a;
        a = b;
        b = c;
        c = next;
    }
    return c;
}

inline BigInt padovan(long long n) {
    if (n < 0) throw std::invalid_argument("padovan: negative index");
    BigInt a = 1, b = 1, c = 1;  /* y0, y1, y2 */
    if (n <= 2) return 1;
    for (long long i = 3; i <= n; ++i) {
        BigInt next = b + a;
        a = b;
        b = c;
        c = next;
    }
    return c;
}

/* minimal forts of C_n; Perrin hits the cycle seeds 3, 2, 5 exactly */
inline BigInt cycle_count(long long n) {
    if (n < 3) throw std::invalid_argument("cycle_count: requires n >= 3");
    return perrin(n);
}

/* minimal forts of P_n. The n = -1 and n = 0 conventions exist so the
   spider formula can speak uniformly about legs of length 1 and 2. */
inline BigInt path_count(long long n) {
    if (n < -1) throw std::invalid_argument("path_count: requires n >= -1");
    if (n == -1) return 1;
    if (n == 0) return 0;
    return padovan(n - 1);
}

struct PlasticConstants {
    BigFloat psi;    /* 1.32471795724474602596... */
    BigFloat alpha;  /* psi^5 / (2 psi + 3), the path closed-form scale */
};

inline const PlasticConstants& plastic_constants() {
    static const PlasticConstants c = [] {
        BigFloat x = 1.3247;
        for (int i = 0; i < 12; ++i) x -= (x * x * x - x - 1) / (3 * x * x - 1);
        PlasticConstants pc;
        pc.psi = x;
        pc.alpha = boost::multiprecision::pow(x, 5) / (2 * x + 3);
        return pc;
    }();
    return c;
}

namespace detail {

/* nearest integer, or nullopt when the value sits within 1e-6 of a half
   integer (ambiguous at this precision) */
inline std::optional<BigInt> round_unambiguous(const BigFloat& x) {
    BigFloat fl = boost::multiprecision::floor(x);
    BigFloat frac = x - fl;
    if (boost::multiprecision::abs(frac - BigFloat(0.5)) <= BigFloat(1e-6)) return std::nullopt;
    BigInt base = fl.convert_to<BigInt>();
    return frac > 0.5 ? base + 1 : base;
}

}  // namespace detail

/* nint(psi^n), valid from n = 10 on; falls back to the recurrence if the
   rounding guard ever trips (it should not at 50-digit precision) */
inline BigInt cycle_count_rounded(long long n, bool* used_fallback = nullptr) {
    if (n < 10) throw std::invalid_argument("cycle_count_rounded: requires n >= 10");
    if (used_fallback) *used_fallback = false;
    auto r = detail::round_unambiguous(
        boost::multiprecision::pow(plastic_constants().psi, static_cast<unsigned>(n)));
    if (r) return *r;
    if (used_fallback) *used_fallback = true;
    return cycle_count(n);
}

/* nint(psi^{n+4} / (2 psi + 3)), valid from n = 1 on */
inline BigInt path_count_rounded(long long n, bool* used_fallback = nullptr) {
    if (n < 1) throw std::invalid_argument("path_count_rounded: requires n >= 1");
    if (used_fallback) *used_fallback = false;
    const auto& pc = plastic_constants();
    auto r = detail::round_unambiguous(
        boost::multiprecision::pow(pc.psi, static_cast<unsigned>(n + 4)) / (2 * pc.psi + 3));
    if (r) return *r;
    if (used_fallback) *used_fallback = true;
    return path_count(n);
}

/* Minimal forts of a spider with legs l_1..l_k: forts that avoid the
   junction's neighbors on every leg, forts that ride a single leg into the
   junction, and forts living on exactly two legs. */
inline BigInt spider_count(const std::vector<long long>& legs) {
    if (legs.size() < 2) throw std::invalid_argument("spider_count: requires k >= 2 legs");
    for (auto l : legs)
        if (l < 1) throw std::invalid_argument("spider_count: every leg length must be >= 1");
    const std::size_t k = legs.size();
    BigInt term1 = 1;
    for (auto l : legs) term1 *= path_count(l - 1);
    BigInt term2 = 0;
    for (std::size_t i = 0; i < k; ++i) {
        BigInt prod = path_count(legs[i] - 2);
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) prod *= path_count(legs[j] - 1);
        term2 += prod;
    }
    BigInt term3 = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            term3 += path_count(legs[i]) * path_count(legs[j]);
    return term1 + term2 + term3;
}

/* |F| <= C(k,2) * path_count(n) for the order-n spider */
inline BigInt spider_bound(const std::vector<long long>& legs) {
    if (legs.size() < 2) throw std::invalid_argument("spider_bound: requires k >= 2 legs");
    long long order = 1;
    for (auto l : legs) {
        if (l < 1) throw std::invalid_argument("spider_bound: every leg length must be >= 1");
        order += l;
    }
    return binomial(static_cast<long long>(legs.size()), 2) * path_count(order);
}

/* (r-1)^k forts through the center plus k*C(r-1,2) blade-pair forts */
inline BigInt windmill_count(long long r, long long k) {
    if (r < 3) throw std::invalid_argument("windmill_count: requires r >= 3");
    if (k < 2) throw std::invalid_argument("windmill_count: requires k >= 2");
    return ipow(r - 1, static_cast<unsigned long long>(k)) + k * binomial(r - 1, 2);
}

}  // namespace fortlab
