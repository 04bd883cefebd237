#pragma once

// Canonical text rendering of exact objects:
//
//     (2*pi*i)^p * e(a) * q^(r) * [c_0 + c_1*q^(k1/D) + ... + O(q^(order))]
//
// Exponents inside the bracket are relative to the prefactor q^(r); z stands
// for ζ₅ inside coefficients.

#include "series.hpp"

#include <string>

namespace qfive {

namespace detail {

inline std::string render_term(const CycloQ5& c, const BigRat& exponent, bool first) {
    std::string out;
    bool rational = c.is_rational();
    bool negative = rational && sgn(c[0]) < 0;
    CycloQ5 mag = negative ? -c : c;
    if (first) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    bool unit = rational && mag[0] == 1;
    if (sgn(exponent) == 0) return out + to_string(mag);
    if (!unit) out += to_string(mag) + "*";
    return out + "q^(" + to_string(exponent) + ")";
}

}  // namespace detail

inline std::string to_string(const FracSeries& f) {
    std::string out = "(2*pi*i)^" + std::to_string(f.cpow()) + " * " + to_string(f.phase()) + " * q^(" +
                      to_string(f.qpow()) + ") * [";
    bool first = true;
    for (const auto& [k, c] : f.tail()) {
        BigRat e(k, f.scale());
        e.canonicalize();
        out += detail::render_term(c, e, first);
        first = false;
    }
    if (first) out += "0";
    if (f.order()) out += " + O(q^(" + to_string(*f.order()) + "))";
    return out + "]";
}

}  // namespace qfive
