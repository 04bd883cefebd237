#pragma once

// Exact arithmetic in the cyclotomic field Q(ζ), ζ = e^{2πi/5}, in the power
// basis {1, ζ, ζ², ζ³}. ζ⁴ is always rewritten as −1 − ζ − ζ² − ζ³, so every
// element has exactly one representation and equality is coefficient-wise.

#include "rational.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qfive {

class CycloQ5 {
public:
    using Coeffs = std::array<BigRat, 4>;

    CycloQ5() = default;
    CycloQ5(long v) : c_{BigRat(v), BigRat(0), BigRat(0), BigRat(0)} {}  // NOLINT(implicit)
    CycloQ5(const BigRat& v) : c_{v, BigRat(0), BigRat(0), BigRat(0)} {}  // NOLINT(implicit)
    CycloQ5(BigRat c0, BigRat c1, BigRat c2, BigRat c3) : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
        for (auto& x : c_) x.canonicalize();
    }

    /// ζ^k for any integer k.
    static CycloQ5 zeta(long k) {
        long r = ((k % 5) + 5) % 5;
        if (r == 4) return {BigRat(-1), BigRat(-1), BigRat(-1), BigRat(-1)};
        CycloQ5 out;
        out.c_[static_cast<std::size_t>(r)] = 1;
        return out;
    }

    /// √5 = ζ − ζ² − ζ³ + ζ⁴ (quadratic Gauss sum), i.e. (−1, 0, −2, −2).
    static CycloQ5 sqrt5() { return {BigRat(-1), BigRat(0), BigRat(-2), BigRat(-2)}; }

    const Coeffs& coeffs() const { return c_; }
    const BigRat& operator[](std::size_t i) const { return c_[i]; }

    bool is_zero() const { return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
    bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }

    friend bool operator==(const CycloQ5& a, const CycloQ5& b) { return a.c_ == b.c_; }

    CycloQ5& operator+=(const CycloQ5& o) {
        for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
        return *this;
    }
    CycloQ5& operator-=(const CycloQ5& o) {
        for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    CycloQ5& operator*=(const BigRat& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    CycloQ5& operator*=(const CycloQ5& o) { return *this = *this * o; }
    CycloQ5& operator/=(const CycloQ5& o) { return *this = *this * o.inverse(); }

    friend CycloQ5 operator+(CycloQ5 a, const CycloQ5& b) { return a += b; }
    friend CycloQ5 operator-(CycloQ5 a, const CycloQ5& b) { return a -= b; }
    friend CycloQ5 operator-(CycloQ5 a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend CycloQ5 operator*(CycloQ5 a, const BigRat& s) { return a *= s; }
    friend CycloQ5 operator*(const BigRat& s, CycloQ5 a) { return a *= s; }
    friend CycloQ5 operator*(CycloQ5 a, long s) { return a *= BigRat(s); }
    friend CycloQ5 operator*(long s, CycloQ5 a) { return a *= BigRat(s); }
    friend CycloQ5 operator/(const CycloQ5& a, const CycloQ5& b) { return a * b.inverse(); }

    friend CycloQ5 operator*(const CycloQ5& a, const CycloQ5& b) {
        std::array<BigRat, 7> raw;
        for (std::size_t i = 0; i < 4; ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < 4; ++j) raw[i + j] += a.c_[i] * b.c_[j];
        }
        return reduce(raw);
    }

    /// Folds a degree ≤ 6 polynomial in ζ into the power basis.
    template <typename T>
    static CycloQ5 reduce(const std::array<T, 7>& raw) {
        // ζ⁵ = 1, ζ⁶ = ζ, then ζ⁴ = −(1 + ζ + ζ² + ζ³).
        BigRat c0 = BigRat(raw[0]) + BigRat(raw[5]);
        BigRat c1 = BigRat(raw[1]) + BigRat(raw[6]);
        BigRat c4 = BigRat(raw[4]);
        return {c0 - c4, c1 - c4, BigRat(raw[2]) - c4, BigRat(raw[3]) - c4};
    }

    /// Multiplicative inverse by an exact 4×4 solve of (x · y = 1).
    CycloQ5 inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(zeta5)");
        // Column j of m holds x·ζ^j in the power basis.
        std::array<std::array<BigRat, 5>, 4> m;
        for (std::size_t j = 0; j < 4; ++j) {
            CycloQ5 col = *this * zeta(static_cast<long>(j));
            for (std::size_t i = 0; i < 4; ++i) m[i][j] = col.c_[i];
        }
        for (std::size_t i = 0; i < 4; ++i) m[i][4] = (i == 0) ? 1 : 0;
        for (std::size_t col = 0; col < 4; ++col) {
            std::size_t pivot = col;
            while (sgn(m[pivot][col]) == 0) ++pivot;  // nonsingular: a pivot exists
            std::swap(m[pivot], m[col]);
            BigRat inv = 1 / m[col][col];
            for (auto& v : m[col]) v *= inv;
            for (std::size_t r = 0; r < 4; ++r) {
                if (r == col || sgn(m[r][col]) == 0) continue;
                BigRat f = m[r][col];
                for (std::size_t k = 0; k < 5; ++k) m[r][k] -= f * m[col][k];
            }
        }
        return {m[0][4], m[1][4], m[2][4], m[3][4]};
    }

    CycloQ5 pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        CycloQ5 out(1), base = *this;
        while (n != 0) {
            if (n & 1) out *= base;
            base *= base;
            n >>= 1;
        }
        return out;
    }

    /// Numeric value under ζ ↦ e^{2πi/5}.
    std::complex<double> embed() const {
        std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / 5.0);
        std::complex<double> acc = 0, zk = 1;
        for (const auto& x : c_) {
            acc += x.get_d() * zk;
            zk *= z;
        }
        return acc;
    }

private:
    Coeffs c_{BigRat(0), BigRat(0), BigRat(0), BigRat(0)};
};

/// "3/2", or "(c0 + c1*z + c2*z^2 + c3*z^3)" with zero terms dropped; z stands for ζ₅.
inline std::string to_string(const CycloQ5& x) {
    if (x.is_rational()) return to_string(x[0]);
    static const char* const basis[] = {"", "z", "z^2", "z^3"};
    std::string out = "(";
    bool first = true;
    for (std::size_t i = 0; i < 4; ++i) {
        const BigRat& c = x[i];
        if (sgn(c) == 0) continue;
        BigRat mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        if (i == 0) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += basis[i];
        }
    }
    return out + ")";
}

}  // namespace qfive
