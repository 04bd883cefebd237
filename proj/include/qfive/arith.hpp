#pragma once

// Arithmetic functions used as coefficient oracles for the q-series identities.

#include "rational.hpp"

#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qfive {

/// Legendre symbol (m/5): 1 for m ≡ ±1, −1 for m ≡ ±2, 0 for m ≡ 0 (mod 5).
constexpr int legendre5(std::int64_t m) {
    constexpr int table[5] = {0, 1, -1, -1, 1};
    return table[((m % 5) + 5) % 5];
}

/// Positive divisors of n in increasing order (trial division up to √n).
inline std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::domain_error("divisors: n must be positive");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline std::int64_t sigma(std::int64_t n) {
    std::int64_t s = 0;
    for (auto d : divisors(n)) s += d;
    return s;
}

enum class DivisorKernel {
    A,    ///< Σ_{d|n} d·(d/5)
    B,    ///< Σ_{d|n} (n/d)·(d/5)
    C,    ///< Σ_{d|n, 5∤d} d
    D25,  ///< Σ_{d|n} (d/5)(25n/d − 11d)
    E11,  ///< Σ_{d|n} (d/5)(11n/d − 5d)
    S,    ///< σ(n) − 5σ(n/5), σ(n/5) = 0 when 5 ∤ n
};

inline constexpr DivisorKernel kAllKernels[] = {DivisorKernel::A,   DivisorKernel::B,   DivisorKernel::C,
                                                DivisorKernel::D25, DivisorKernel::E11, DivisorKernel::S};

inline std::string_view kernel_name(DivisorKernel k) {
    switch (k) {
        case DivisorKernel::A: return "A";
        case DivisorKernel::B: return "B";
        case DivisorKernel::C: return "C";
        case DivisorKernel::D25: return "D25";
        case DivisorKernel::E11: return "E11";
        case DivisorKernel::S: return "S";
    }
    return "?";
}

inline std::optional<DivisorKernel> parse_kernel(std::string_view name) {
    for (auto k : kAllKernels)
        if (kernel_name(k) == name) return k;
    return std::nullopt;
}

inline BigRat divisor_sum(DivisorKernel kernel, std::int64_t n) {
    if (n < 1) throw std::domain_error("divisor_sum: n must be positive");
    if (kernel == DivisorKernel::S) {
        std::int64_t s = sigma(n) - (n % 5 == 0 ? 5 * sigma(n / 5) : 0);
        return BigRat(BigInt(static_cast<long>(s)));
    }
    BigInt acc(0);
    for (auto d : divisors(n)) {
        const std::int64_t e = n / d;
        const int chi = legendre5(d);
        switch (kernel) {
            case DivisorKernel::A: acc += d * chi; break;
            case DivisorKernel::B: acc += e * chi; break;
            case DivisorKernel::C:
                if (d % 5 != 0) acc += d;
                break;
            case DivisorKernel::D25: acc += chi * (25 * e - 11 * d); break;
            case DivisorKernel::E11: acc += chi * (11 * e - 5 * d); break;
            case DivisorKernel::S: break;
        }
    }
    return BigRat(acc);
}

/// Partition numbers by Euler's pentagonal recurrence
/// p(n) = Σ_{k≥1} (−1)^{k+1} [p(n − k(3k−1)/2) + p(n − k(3k+1)/2)].
/// The memo table is shared and guarded, so concurrent callers are fine.
inline BigInt partition_p(std::int64_t n) {
    if (n < 0) throw std::domain_error("partition_p: n must be non-negative");
    static std::mutex mutex;
    static std::vector<BigInt> memo{BigInt(1)};
    std::lock_guard lock(mutex);
    while (static_cast<std::int64_t>(memo.size()) <= n) {
        const auto m = static_cast<std::int64_t>(memo.size());
        BigInt p(0);
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            const std::int64_t g2 = k * (3 * k + 1) / 2;
            BigInt term = memo[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) term += memo[static_cast<std::size_t>(m - g2)];
            if (k % 2 == 1) p += term;
            else p -= term;
        }
        memo.push_back(p);
    }
    return memo[static_cast<std::size_t>(n)];
}

}  // namespace qfive
