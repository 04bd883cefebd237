#pragma once

#include "cyclo5.hpp"

#include <complex>
#include <numbers>
#include <stdexcept>

namespace qfive {

/// The root of unity e^{2πi·a}, with a kept reduced into [0, 1).
class Phase {
public:
    Phase() = default;
    explicit Phase(const BigRat& a) : a_(frac(a)) {}

    static Phase of(long num, long den) { return Phase(make_rational(num, den)); }

    const BigRat& turns() const { return a_; }
    bool is_trivial() const { return sgn(a_) == 0; }

    /// Denominator divides 10, i.e. the phase lies in Q(ζ₅) (e^{πi/5} = −ζ³).
    bool in_cyclo5() const { return 10 % to_int64(a_.get_den()) == 0; }

    friend Phase operator*(const Phase& x, const Phase& y) { return Phase(x.a_ + y.a_); }
    Phase& operator*=(const Phase& o) { return *this = *this * o; }
    Phase inverse() const { return Phase(-a_); }
    Phase pow(long n) const { return Phase(a_ * n); }

    friend bool operator==(const Phase& x, const Phase& y) { return x.a_ == y.a_; }

    std::complex<double> embed() const { return std::polar(1.0, 2.0 * std::numbers::pi * a_.get_d()); }

private:
    BigRat a_{0};
};

class NotRepresentable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact value of a phase whose denominator divides 10, via ζ₁₀ = −ζ₅³.
inline CycloQ5 phase_to_cyclo(const Phase& p) {
    if (!p.in_cyclo5())
        throw NotRepresentable("phase e(" + to_string(p.turns()) + ") is not in Q(zeta5): denominator does not divide 10");
    long k = to_int64(BigRat(p.turns() * 10));
    CycloQ5 out = CycloQ5::zeta(3 * k);
    return (k % 2 == 0) ? out : -out;
}

inline std::string to_string(const Phase& p) { return "e(" + to_string(p.turns()) + ")"; }

}  // namespace qfive
