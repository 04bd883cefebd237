#pragma once

// Independent oracles for the test suites. Nothing here calls into the series
// engine: values are produced by brute force over plain integers or doubles.

#include <qfive/cyclo5.hpp>
#include <qfive/rational.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <vector>

namespace qfive {

inline void PrintTo(const CycloQ5& x, std::ostream* os) { *os << to_string(x); }

}  // namespace qfive

namespace oracle {

using cd = std::complex<double>;

inline cd zeta5() { return std::polar(1.0, 2.0 * std::numbers::pi / 5.0); }

/// c0 + c1ζ + c2ζ² + c3ζ³ evaluated in double precision.
inline cd embed(const qfive::CycloQ5& x) {
    cd acc = 0;
    for (int i = 0; i < 4; ++i) acc += x[static_cast<std::size_t>(i)].get_d() * std::pow(zeta5(), i);
    return acc;
}

/// Number of partitions of n by the coin-change recurrence over part sizes.
inline std::vector<std::int64_t> partitions_upto(int n) {
    std::vector<std::int64_t> ways(static_cast<std::size_t>(n + 1), 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int s = part; s <= n; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
    return ways;
}

inline int chi5(std::int64_t m) {
    switch (((m % 5) + 5) % 5) {
        case 1: case 4: return 1;
        case 2: case 3: return -1;
        default: return 0;
    }
}

/// Naive divisor sums by scanning every d ≤ n.
inline std::int64_t sum_A(std::int64_t n) { std::int64_t s = 0; for (std::int64_t d = 1; d <= n; ++d) if (n % d == 0) s += d * chi5(d); return s; }
inline std::int64_t sum_B(std::int64_t n) { std::int64_t s = 0; for (std::int64_t d = 1; d <= n; ++d) if (n % d == 0) s += (n / d) * chi5(d); return s; }
inline std::int64_t sigma(std::int64_t n) { std::int64_t s = 0; for (std::int64_t d = 1; d <= n; ++d) if (n % d == 0) s += d; return s; }

/// Integer power series with integer exponents, truncated at `limit` terms.
using IntSeries = std::vector<std::int64_t>;

inline IntSeries int_mul(const IntSeries& a, const IntSeries& b, std::size_t limit) {
    IntSeries out(limit, 0);
    for (std::size_t i = 0; i < a.size() && i < limit; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < limit; ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// Π_{n≥1} (1 − q^{step·n})^power, power ≥ 0, by repeated brute-force multiplication.
inline IntSeries euler_product(int step, int power, std::size_t limit) {
    IntSeries out(limit, 0);
    out[0] = 1;
    for (int rep = 0; rep < power; ++rep)
        for (std::size_t n = static_cast<std::size_t>(step); n < limit; n += static_cast<std::size_t>(step)) {
            IntSeries f(n + 1, 0);
            f[0] = 1;
            f[n] = -1;
            out = int_mul(out, f, limit);
        }
    return out;
}

/// Reciprocal of an integer series with constant term ±1.
inline IntSeries int_inv(const IntSeries& a, std::size_t limit) {
    IntSeries out(limit, 0);
    out[0] = a[0];  // ±1 is its own inverse
    for (std::size_t n = 1; n < limit; ++n) {
        std::int64_t s = 0;
        for (std::size_t j = 1; j <= n && j < a.size(); ++j) s += a[j] * out[n - j];
        out[n] = -s * a[0];
    }
    return out;
}

/// θ[ε,ε′](z,τ) summed in double precision over |n| ≤ 30.
inline cd theta_sum(double eps, double epsp, int m, cd z, cd tau) {
    const cd two_pi_i(0, 2 * std::numbers::pi);
    cd acc = 0;
    for (int n = -30; n <= 30; ++n) {
        double a = n + eps / 2;
        acc += std::pow(two_pi_i * a, m) * std::exp(two_pi_i * (0.5 * a * a * tau + a * (z + epsp / 2)));
    }
    return acc;
}

/// η(τ) from 400 product factors.
inline cd eta(cd tau) {
    const cd two_pi_i(0, 2 * std::numbers::pi);
    cd q = std::exp(two_pi_i * tau);
    cd acc = std::exp(two_pi_i * tau / 24.0), qn = 1;
    for (int n = 1; n <= 400; ++n) {
        qn *= q;
        acc *= 1.0 - qn;
    }
    return acc;
}

inline qfive::CycloQ5 random_cyclo(std::mt19937_64& rng, int range = 9) {
    std::uniform_int_distribution<long> num(-range, range), den(1, 4);
    return {qfive::make_rational(num(rng), den(rng)), qfive::make_rational(num(rng), den(rng)),
            qfive::make_rational(num(rng), den(rng)), qfive::make_rational(num(rng), den(rng))};
}

}  // namespace oracle
