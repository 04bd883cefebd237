#pragma once

// Arbitrary-precision rationals (GMP) plus the handful of helpers the rest of
// the library needs: parsing "a/b", reduction mod 1, lcm of denominators.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qfive {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Parses "7", "-3/10" or "22/50"; the result is canonicalized.
inline BigRat parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.front() == '+') s.erase(0, 1);
    BigRat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + std::string(text));
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
}

inline BigRat make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

/// Canonical "num/den" form; integers print without a denominator.
inline std::string to_string(const BigRat& r) { return r.get_str(10); }

/// Always "num/den", used by the JSON reports.
inline std::string to_fraction_string(const BigRat& r) {
    return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

inline BigInt floor(const BigRat& r) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

/// r reduced into [0, 1).
inline BigRat frac(const BigRat& r) {
    BigRat out = r - BigRat(floor(r));
    out.canonicalize();
    return out;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline bool is_integer(const BigRat& r) { return r.get_den() == 1; }

/// Narrowing conversion for values known to be small (keys, scales).
inline std::int64_t to_int64(const BigInt& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
    return v.get_si();
}

inline std::int64_t to_int64(const BigRat& r) {
    if (!is_integer(r)) throw std::domain_error("expected an integer, got " + to_string(r));
    return to_int64(r.get_num());
}

inline BigRat pow(BigRat base, unsigned exponent) {
    BigRat out(1);
    while (exponent != 0) {
        if (exponent & 1u) out *= base;
        base *= base;
        exponent >>= 1u;
    }
    return out;
}

}  // namespace qfive
