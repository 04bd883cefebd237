#pragma once

// Theta constants with rational characteristics and Dedekind eta products as
// exact FracSeries.
//
//   θ[ε,ε′](ζ,τ) = Σ_n exp(2πi[½(n+ε/2)²τ + (n+ε/2)(ζ+ε′/2)])
//
// theta_const sums this definition directly; theta_const_product expands the
// Jacobi triple product and serves as the cross-check.

#include "series.hpp"

#include <array>
#include <cstdlib>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qfive {

struct ThetaChar {
    BigRat eps{0};
    BigRat eps_prime{0};

    ThetaChar() = default;
    ThetaChar(BigRat e, BigRat ep) : eps(std::move(e)), eps_prime(std::move(ep)) {
        eps.canonicalize();
        eps_prime.canonicalize();
    }

    friend bool operator==(const ThetaChar& a, const ThetaChar& b) {
        return a.eps == b.eps && a.eps_prime == b.eps_prime;
    }
};

/// Characteristic (a/b, c/d).
inline ThetaChar chr(long a, long b, long c, long d) { return {make_rational(a, b), make_rational(c, d)}; }

inline std::string to_string(const ThetaChar& ch) {
    return "[" + to_string(ch.eps) + "," + to_string(ch.eps_prime) + "]";
}

/// Parses "1/5,3/5" (brackets optional).
inline ThetaChar parse_char(std::string text) {
    if (!text.empty() && text.front() == '[') text.erase(0, 1);
    if (!text.empty() && text.back() == ']') text.pop_back();
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("characteristic must look like 'eps,eps_prime'");
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

/// The twelve characteristics appearing in the level-five formulas.
inline std::vector<ThetaChar> catalog_characteristics() {
    return {chr(1, 1, 1, 5), chr(1, 1, 3, 5), chr(1, 5, 1, 1), chr(3, 5, 1, 1),
            chr(1, 5, 1, 5), chr(3, 5, 3, 5), chr(1, 5, 3, 5), chr(3, 5, 9, 5),
            chr(1, 5, 7, 5), chr(3, 5, 1, 5), chr(1, 5, 9, 5), chr(3, 5, 7, 5)};
}

/// Shift rule θ[ε+2m, ε′+2n] = e^{πiεn} θ[ε,ε′]. Returns (phase, shifted) with
/// θ[shifted] = phase · θ[ch]; the phase is e(ε·n/2).
inline std::pair<Phase, ThetaChar> char_shift_phase(const ThetaChar& ch, long m, long n) {
    ThetaChar shifted{ch.eps + 2 * m, ch.eps_prime + 2 * n};
    return {Phase(ch.eps * n / 2), shifted};
}

/// θ[−ε,−ε′](ζ) = θ[ε,ε′](−ζ): theta constants agree, odd derivatives flip sign.
inline ThetaChar negate(const ThetaChar& ch) { return {-ch.eps, -ch.eps_prime}; }

namespace detail {

/// Dense tail on a fixed scale, multiplied in place by binomials (1 + c q^{s/D}).
class DenseProduct {
public:
    explicit DenseProduct(std::int64_t limit) : c_(static_cast<std::size_t>(std::max<std::int64_t>(limit, 0))) {
        if (!c_.empty()) c_[0] = CycloQ5(1);
    }

    void times_binomial(const CycloQ5& c, std::int64_t shift) {
        if (shift <= 0) throw std::logic_error("binomial shift must be positive");
        const auto limit = static_cast<std::int64_t>(c_.size());
        const bool rational = c.is_rational();
        for (std::int64_t k = limit - 1; k >= shift; --k) {
            const CycloQ5& src = c_[static_cast<std::size_t>(k - shift)];
            if (src.is_zero()) continue;
            c_[static_cast<std::size_t>(k)] += rational ? src * c[0] : src * c;
        }
    }

    void times_constant(const CycloQ5& c) {
        for (auto& x : c_)
            if (!x.is_zero()) x *= c;
    }

    FracSeries::Tail take() {
        FracSeries::Tail t;
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!c_[k].is_zero()) t.emplace_hint(t.end(), static_cast<std::int64_t>(k), std::move(c_[k]));
        return t;
    }

private:
    std::vector<CycloQ5> c_;
};

inline BigRat theta_exponent(const BigRat& eps, const BigInt& n) {
    BigRat a = BigRat(n) + eps / 2;
    return a * a / 2;
}

/// n minimizing (n + ε/2)², i.e. the integer nearest −ε/2.
inline BigInt theta_center(const BigRat& eps) { return floor(BigRat(-eps / 2 + BigRat(1, 2))); }

inline std::int64_t theta_scale(const BigRat& eps) { return 2 * to_int64(eps.get_den()); }

}  // namespace detail

/// Theta constant θ^{(m)}[ε,ε′](0,τ) by direct summation of the defining series,
/// exact for relative q-exponents below `order`. The result carries (2πi)^m.
inline FracSeries theta_const(const ThetaChar& ch, int deriv_order, const BigRat& order) {
    if (deriv_order < 0 || deriv_order > 3) throw std::invalid_argument("theta_const: derivative order must be 0..3");
    if (sgn(order) <= 0) throw std::invalid_argument("theta_const: order must be positive");
    const BigRat& eps = ch.eps;
    const BigRat& epsp = ch.eps_prime;
    const BigInt n0 = detail::theta_center(eps);
    const BigRat base = detail::theta_exponent(eps, n0);
    const std::int64_t scale = detail::theta_scale(eps);

    FracSeries::Tail tail;
    auto add_term = [&](const BigInt& n) -> bool {
        BigRat rel = detail::theta_exponent(eps, n) - base;
        if (rel >= order) return false;
        BigRat a = BigRat(n) + eps / 2;
        BigRat weight = pow(a, static_cast<unsigned>(deriv_order));
        if (sgn(weight) != 0) {
            CycloQ5 c = phase_to_cyclo(Phase(BigRat(n) * epsp / 2)) * weight;
            std::int64_t key = to_int64(BigRat(rel * scale));
            auto [it, inserted] = tail.emplace(key, c);
            if (!inserted) it->second += c;
        }
        return true;
    };
    for (BigInt n = n0; add_term(n); ++n) {
    }
    for (BigInt n = n0 - 1; add_term(n); --n) {
    }
    return {scale, Phase(eps * epsp / 4), base, deriv_order, std::move(tail), order};
}

/// Theta constant θ[ε,ε′](0,τ) from the Jacobi triple product
///   e^{πiεε′/2} x^{ε²/4} Π (1−x^{2n})(1+e^{πiε′}x^{2n−1+ε})(1+e^{−πiε′}x^{2n−1−ε}),  x = q^{1/2}.
inline FracSeries theta_const_product(const ThetaChar& ch, const BigRat& order) {
    if (sgn(order) <= 0) throw std::invalid_argument("theta_const_product: order must be positive");
    const BigRat& eps = ch.eps;
    const BigRat& epsp = ch.eps_prime;
    const std::int64_t scale = detail::theta_scale(eps);
    Phase phase(eps * epsp / 4);
    BigRat qpow = eps * eps / 8;

    // Collect binomials (1 + c q^s); a negative s is rewritten as c q^s (1 + c^{-1} q^{-s}).
    struct Binomial {
        Phase c;
        BigRat s;
    };
    std::vector<Binomial> factors;
    std::vector<CycloQ5> constants;
    const Phase plus(epsp / 2), minus(-epsp / 2);
    auto admit = [&](const Phase& c, const BigRat& s) {
        if (sgn(s) > 0) {
            factors.push_back({c, s});
        } else if (sgn(s) == 0) {
            constants.push_back(CycloQ5(1) + phase_to_cyclo(c));
        } else {
            phase *= c;
            qpow += s;
            factors.push_back({c.inverse(), -s});
        }
    };
    // Binomials whose exponent lies at or beyond the order change nothing below it.
    // Negative exponents only occur for |ε| > 1 and shift the prefactor down, so the scan
    // runs until both exponent families have passed `order` plus that shift.
    BigRat reach = order + abs(eps) + 1;
    for (long n = 1; BigRat(n) - BigRat(1, 2) - abs(eps) / 2 < reach; ++n) {
        if (n < reach) factors.push_back({Phase(BigRat(1, 2)), BigRat(n)});
        admit(plus, BigRat(n) - BigRat(1, 2) + eps / 2);
        admit(minus, BigRat(n) - BigRat(1, 2) - eps / 2);
    }
    const std::int64_t limit = detail::key_limit(order, scale);
    detail::DenseProduct acc(limit);
    for (const auto& c : constants) acc.times_constant(c);
    for (const auto& f : factors) {
        BigRat key = f.s * scale;
        if (!is_integer(key)) throw std::logic_error("triple product exponent off the scale grid");
        std::int64_t k = to_int64(key);
        if (k >= limit) continue;
        acc.times_binomial(phase_to_cyclo(f.c), k);
    }
    return {scale, phase, qpow, 0, acc.take(), order};
}

/// η(mτ) = q^{m/24} Π_{n≥1}(1 − q^{mn}), exact below relative order `order`.
inline FracSeries eta_q(const BigRat& mult, const BigRat& order) {
    if (sgn(mult) <= 0) throw std::invalid_argument("eta_q: multiplier must be positive");
    BigRat m = mult;
    m.canonicalize();
    const std::int64_t scale = to_int64(m.get_den());
    const std::int64_t step = to_int64(m.get_num());
    const std::int64_t limit = detail::key_limit(order, scale);
    detail::DenseProduct acc(limit);
    for (std::int64_t k = step; k < limit; k += step) acc.times_binomial(CycloQ5(-1), k);
    return {scale, Phase(), m / 24, 0, acc.take(), order};
}

/// One family Π_{n≥1} (1 + c·q^{step·n − offset})^power; 0 ≤ offset < step.
struct ProductFactor {
    CycloQ5 c;
    std::int64_t step = 1;
    std::int64_t offset = 0;
    int power = 1;
};

/// Π over the families with integer q-exponents, exact below relative order `order`.
inline FracSeries q_product(const std::vector<ProductFactor>& factors, const BigRat& order) {
    if (sgn(order) <= 0) throw std::invalid_argument("q_product: order must be positive");
    const std::int64_t limit = detail::key_limit(order, 1);
    detail::DenseProduct num(limit), den(limit);
    bool any_den = false;
    for (const auto& f : factors) {
        if (f.step <= 0 || f.offset < 0 || f.offset >= f.step)
            throw std::invalid_argument("q_product: need 0 <= offset < step");
        auto& target = f.power < 0 ? den : num;
        any_den = any_den || f.power < 0;
        for (int rep = 0; rep < std::abs(f.power); ++rep)
            for (std::int64_t k = f.step - f.offset; k < limit; k += f.step) target.times_binomial(f.c, k);
    }
    FracSeries out(1, Phase(), BigRat(0), 0, num.take(), order);
    if (any_den) out = series_mul(out, series_inv(FracSeries(1, Phase(), BigRat(0), 0, den.take(), order)));
    return out;
}

struct EtaFactor {
    BigRat mult;
    int exponent = 0;
};

/// Π η(m_i τ)^{e_i}; multipliers must be positive and distinct.
using EtaQuotientSpec = std::vector<EtaFactor>;

/// Parses "5:5,1:-1" into η(5τ)^5 η(τ)^{-1}.
inline EtaQuotientSpec parse_eta_spec(const std::string& text) {
    EtaQuotientSpec spec;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        std::string item = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("eta factor must look like 'mult:exp', got '" + item + "'");
        spec.push_back({parse_rational(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return spec;
}

inline FracSeries eta_quotient(const EtaQuotientSpec& spec, const BigRat& order) {
    if (spec.empty()) throw std::invalid_argument("eta_quotient: empty specification");
    for (std::size_t i = 0; i < spec.size(); ++i) {
        if (sgn(spec[i].mult) <= 0) throw std::invalid_argument("eta_quotient: multipliers must be positive");
        for (std::size_t j = 0; j < i; ++j)
            if (spec[i].mult == spec[j].mult) throw std::invalid_argument("eta_quotient: duplicate multiplier");
    }
    FracSeries out = FracSeries::one();
    for (const auto& f : spec) {
        if (f.exponent == 0) continue;
        FracSeries base = eta_q(f.mult, order);
        if (f.exponent < 0) base = series_inv(base);
        out = series_mul(out, series_pow(base, static_cast<unsigned>(f.exponent < 0 ? -f.exponent : f.exponent)));
    }
    return out;
}

}  // namespace qfive
