#pragma once

// Truncated formal series in fractional powers of q = e^{2πiτ}.
//
// A FracSeries represents
//
//     (2πi)^cpow · e(phase) · q^qpow · Σ_k c_k q^{k/D}
//
// with c_k ∈ Q(ζ₅), k ≥ 0. The tail is exact for relative exponents
// k/D < order; an empty order means the tail is an exact polynomial.

#include "cyclo5.hpp"
#include "phase.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qfive {

class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FracSeries {
public:
    using Key = std::int64_t;
    using Tail = std::map<Key, CycloQ5>;

    FracSeries() = default;

    FracSeries(std::int64_t scale, Phase phase, BigRat qpow, std::int64_t cpow, Tail tail,
               std::optional<BigRat> order)
        : scale_(scale), phase_(std::move(phase)), qpow_(std::move(qpow)), cpow_(cpow), tail_(std::move(tail)),
          order_(std::move(order)) {
        if (scale_ <= 0) throw SeriesError("series scale must be positive");
        qpow_.canonicalize();
        if (order_) order_->canonicalize();
        normalize();
    }

    /// The exact constant c.
    static FracSeries constant(const CycloQ5& c) { return monomial(c, Phase(), BigRat(0), 0); }
    static FracSeries one() { return constant(CycloQ5(1)); }
    static FracSeries zero() { return {}; }

    /// c · (2πi)^cpow · e(phase) · q^qpow, exact.
    static FracSeries monomial(const CycloQ5& c, const Phase& phase, const BigRat& qpow, std::int64_t cpow) {
        Tail t;
        if (!c.is_zero()) t.emplace(0, c);
        return {1, phase, qpow, cpow, std::move(t), std::nullopt};
    }

    /// (2πi)^p as an exact series.
    static FracSeries two_pi_i(std::int64_t p) { return monomial(CycloQ5(1), Phase(), BigRat(0), p); }

    std::int64_t scale() const { return scale_; }
    const Phase& phase() const { return phase_; }
    const BigRat& qpow() const { return qpow_; }
    std::int64_t cpow() const { return cpow_; }
    const Tail& tail() const { return tail_; }
    const std::optional<BigRat>& order() const { return order_; }
    bool exact() const { return !order_.has_value(); }
    bool is_zero_tail() const { return tail_.empty(); }

    /// Absolute exponent of key k.
    BigRat exponent_of(Key k) const { return qpow_ + BigRat(k, scale_); }

    /// Absolute bound below which the series is exact; empty when exact.
    std::optional<BigRat> absolute_order() const {
        if (!order_) return std::nullopt;
        return BigRat(qpow_ + *order_);
    }

    /// Smallest stored relative exponent; for an empty tail, the order itself.
    std::optional<BigRat> valuation() const {
        if (!tail_.empty()) return BigRat(tail_.begin()->first, scale_);
        return order_;
    }

    CycloQ5 coeff(Key k) const {
        auto it = tail_.find(k);
        return it == tail_.end() ? CycloQ5() : it->second;
    }

    /// Same series on a finer scale (new_scale must be a multiple of scale()).
    FracSeries rescaled(std::int64_t new_scale) const {
        if (new_scale % scale_ != 0) throw SeriesError("rescale target must be a multiple of the current scale");
        std::int64_t m = new_scale / scale_;
        if (m == 1) return *this;
        Tail t;
        for (const auto& [k, c] : tail_) t.emplace_hint(t.end(), k * m, c);
        FracSeries out = *this;
        out.scale_ = new_scale;
        out.tail_ = std::move(t);
        return out;
    }

    /// Lowers the order to at most `order` (relative), dropping coefficients beyond it.
    FracSeries truncated(const BigRat& order) const {
        FracSeries out = *this;
        if (!out.order_ || order < *out.order_) out.order_ = order;
        out.normalize();
        return out;
    }

    /// Moves the smallest stored key into the prefactor so the tail starts at key 0.
    FracSeries normalized_leading() const {
        if (tail_.empty() || tail_.begin()->first == 0) return *this;
        Key k0 = tail_.begin()->first;
        Tail t;
        for (const auto& [k, c] : tail_) t.emplace_hint(t.end(), k - k0, c);
        BigRat shift(k0, scale_);
        std::optional<BigRat> ord = order_;
        if (ord) *ord -= shift;
        return {scale_, phase_, qpow_ + shift, cpow_, std::move(t), ord};
    }

    /// Same value with prefactor (phase, qpow); the phase ratio must lie in Q(ζ₅) and
    /// qpow must not exceed the current one.
    FracSeries with_prefactor(const Phase& phase, const BigRat& qpow) const {
        BigRat delta = qpow_ - qpow;
        if (sgn(delta) < 0) throw SeriesError("cannot move prefactor above the current q-power");
        Tail t;
        if (!tail_.empty()) {
            Phase ratio = phase_ * phase.inverse();
            if (!ratio.in_cyclo5())
                throw SeriesError("unabsorbable prefactor: phase ratio " + to_string(ratio) + " not in Q(zeta5)");
            CycloQ5 factor = phase_to_cyclo(ratio);
            bool trivial = ratio.is_trivial();
            std::int64_t d = scale_;
            std::int64_t need = to_int64(BigInt(lcm(BigInt(d), delta.get_den())));
            FracSeries fine = rescaled(need);
            Key shift = to_int64(BigRat(delta * need));
            for (const auto& [k, c] : fine.tail_) t.emplace_hint(t.end(), k + shift, trivial ? c : c * factor);
            std::optional<BigRat> ord = order_;
            if (ord) *ord += delta;
            return {need, phase, qpow, cpow_, std::move(t), ord};
        }
        std::optional<BigRat> ord = order_;
        if (ord) *ord += delta;
        return {scale_, phase, qpow, cpow_, {}, ord};
    }

    /// Reduces scale by the gcd of all keys.
    void compact() {
        if (scale_ == 1) return;
        BigInt g(scale_);
        for (const auto& kv : tail_) {
            g = gcd(g, BigInt(static_cast<long>(kv.first)));
            if (g == 1) return;
        }
        std::int64_t d = to_int64(g);
        if (d == 1) return;
        Tail t;
        for (const auto& [k, c] : tail_) t.emplace_hint(t.end(), k / d, c);
        tail_ = std::move(t);
        scale_ /= d;
    }

private:
    void normalize() {
        for (auto it = tail_.begin(); it != tail_.end();) {
            if (it->first < 0) throw SeriesError("negative tail key");
            bool drop = it->second.is_zero() || (order_ && BigRat(it->first, scale_) >= *order_);
            it = drop ? tail_.erase(it) : std::next(it);
        }
        if (tail_.empty() && !order_) {
            // canonical exact zero
            phase_ = Phase();
            qpow_ = 0;
            scale_ = 1;
        }
        compact();
    }

    std::int64_t scale_ = 1;
    Phase phase_;
    BigRat qpow_{0};
    std::int64_t cpow_ = 0;
    Tail tail_;
    std::optional<BigRat> order_;
};

namespace detail {

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return to_int64(lcm(BigInt(static_cast<long>(a)), BigInt(static_cast<long>(b)))); }

inline std::optional<BigRat> min_order(const std::optional<BigRat>& a, const std::optional<BigRat>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

/// Exclusive key bound for relative order `order` at scale d.
inline std::int64_t key_limit(const BigRat& order, std::int64_t d) {
    BigRat x = order * d;
    BigInt c;
    mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return std::max<std::int64_t>(0, to_int64(c));
}

struct IntTerm {
    std::int64_t key;
    std::array<BigInt, 4> v;
};

/// Integer numerators of every coefficient over one common denominator.
inline std::pair<std::vector<IntTerm>, BigInt> integerize(const FracSeries::Tail& tail) {
    BigInt den(1);
    for (const auto& kv : tail)
        for (const auto& x : kv.second.coeffs()) den = lcm(den, x.get_den());
    std::vector<IntTerm> out;
    out.reserve(tail.size());
    for (const auto& [k, c] : tail) {
        IntTerm t{k, {}};
        for (std::size_t i = 0; i < 4; ++i) {
            const BigRat& x = c[i];
            if (sgn(x) == 0) continue;
            t.v[i] = x.get_num() * (den / x.get_den());
        }
        out.push_back(std::move(t));
    }
    return {std::move(out), den};
}

}  // namespace detail

inline FracSeries series_neg(const FracSeries& f) {
    FracSeries::Tail t;
    for (const auto& [k, c] : f.tail()) t.emplace_hint(t.end(), k, -c);
    return {f.scale(), f.phase(), f.qpow(), f.cpow(), std::move(t), f.order()};
}

inline FracSeries series_scale(const FracSeries& f, const CycloQ5& s) {
    FracSeries::Tail t;
    if (!s.is_zero())
        for (const auto& [k, c] : f.tail()) t.emplace_hint(t.end(), k, c * s);
    return {f.scale(), f.phase(), f.qpow(), f.cpow(), std::move(t), f.order()};
}

inline FracSeries series_mul(const FracSeries& f, const FracSeries& g) {
    if ((f.is_zero_tail() && f.exact()) || (g.is_zero_tail() && g.exact())) return FracSeries::zero();
    // Product is exact below min(A + val(g), B + val(f)).
    std::optional<BigRat> order;
    if (f.order() || g.order()) {
        std::optional<BigRat> vf = f.valuation(), vg = g.valuation();
        std::optional<BigRat> a, b;
        if (f.order() && vg) a = *f.order() + *vg;
        if (g.order() && vf) b = *g.order() + *vf;
        order = detail::min_order(a, b);
        if (!order) order = detail::min_order(f.order(), g.order());
    }
    Phase phase = f.phase() * g.phase();
    BigRat qpow = f.qpow() + g.qpow();
    std::int64_t cpow = f.cpow() + g.cpow();
    if (f.is_zero_tail() || g.is_zero_tail()) return {1, phase, qpow, cpow, {}, order};

    std::int64_t d = detail::lcm64(f.scale(), g.scale());
    FracSeries fr = f.rescaled(d), gr = g.rescaled(d);
    std::int64_t limit = order ? detail::key_limit(*order, d)
                               : fr.tail().rbegin()->first + gr.tail().rbegin()->first + 1;

    auto [ft, fden] = detail::integerize(fr.tail());
    auto [gt, gden] = detail::integerize(gr.tail());
    std::vector<std::array<BigInt, 7>> acc(static_cast<std::size_t>(limit));
    std::vector<char> touched(static_cast<std::size_t>(limit), 0);
    for (const auto& a : ft) {
        if (a.key >= limit) break;
        for (const auto& b : gt) {
            std::int64_t s = a.key + b.key;
            if (s >= limit) break;
            auto& cell = acc[static_cast<std::size_t>(s)];
            touched[static_cast<std::size_t>(s)] = 1;
            for (std::size_t p = 0; p < 4; ++p) {
                if (sgn(a.v[p]) == 0) continue;
                for (std::size_t q = 0; q < 4; ++q) {
                    if (sgn(b.v[q]) == 0) continue;
                    mpz_addmul(cell[p + q].get_mpz_t(), a.v[p].get_mpz_t(), b.v[q].get_mpz_t());
                }
            }
        }
    }
    BigInt den = fden * gden;
    FracSeries::Tail tail;
    for (std::int64_t s = 0; s < limit; ++s) {
        if (!touched[static_cast<std::size_t>(s)]) continue;
        const auto& r = acc[static_cast<std::size_t>(s)];
        BigInt c0 = r[0] + r[5] - r[4], c1 = r[1] + r[6] - r[4], c2 = r[2] - r[4], c3 = r[3] - r[4];
        CycloQ5 c(BigRat(c0, den), BigRat(c1, den), BigRat(c2, den), BigRat(c3, den));
        if (!c.is_zero()) tail.emplace_hint(tail.end(), s, std::move(c));
    }
    return {d, phase, qpow, cpow, std::move(tail), order};
}

/// f + g. Both must carry the same power of 2πi; g's prefactor is folded into the
/// tail. The result keeps f's phase and the smaller of the two q-powers.
inline FracSeries series_add(const FracSeries& f, const FracSeries& g) {
    if (g.is_zero_tail() && g.exact()) return f;
    if (f.is_zero_tail() && f.exact()) return g;
    if (f.cpow() != g.cpow() && !f.is_zero_tail() && !g.is_zero_tail())
        throw SeriesError("incompatible constant powers: (2*pi*i)^" + std::to_string(f.cpow()) + " vs (2*pi*i)^" +
                          std::to_string(g.cpow()));
    const FracSeries& lead = f.is_zero_tail() ? g : f;
    BigRat qpow = std::min(f.qpow(), g.qpow());
    FracSeries fa = f.with_prefactor(lead.phase(), qpow);
    FracSeries ga = g.with_prefactor(lead.phase(), qpow);
    std::int64_t d = detail::lcm64(fa.scale(), ga.scale());
    fa = fa.rescaled(d);
    ga = ga.rescaled(d);
    FracSeries::Tail tail = fa.tail();
    for (const auto& [k, c] : ga.tail()) {
        auto [it, inserted] = tail.emplace(k, c);
        if (!inserted) it->second += c;
    }
    return {d, lead.phase(), qpow, lead.cpow(), std::move(tail), detail::min_order(fa.order(), ga.order())};
}

inline FracSeries series_sub(const FracSeries& f, const FracSeries& g) { return series_add(f, series_neg(g)); }

inline FracSeries series_pow(const FracSeries& f, unsigned n) {
    FracSeries out = FracSeries::one();
    if (n == 0) return out;
    FracSeries base = f;
    bool first = true;
    while (n != 0) {
        if (n & 1u) {
            out = first ? base : series_mul(out, base);
            first = false;
        }
        n >>= 1u;
        if (n != 0) base = series_mul(base, base);
    }
    return out;
}

/// Multiplicative inverse. An exact, non-monomial input needs `order` to bound the
/// result; otherwise the input's own order (after normalizing the leading term) is used.
inline FracSeries series_inv(const FracSeries& f, std::optional<BigRat> order = std::nullopt) {
    if (f.is_zero_tail()) throw SeriesError("non-invertible series: zero tail");
    FracSeries n = f.normalized_leading();
    const CycloQ5& c0 = n.tail().begin()->second;
    if (c0.is_zero()) throw SeriesError("non-invertible series: zero constant term");
    Phase phase = n.phase().inverse();
    BigRat qpow = -n.qpow();
    std::int64_t cpow = -n.cpow();
    std::int64_t d = n.scale();
    std::optional<BigRat> ord = detail::min_order(n.order(), order);
    if (!ord) {
        if (n.tail().size() == 1) return FracSeries(d, phase, qpow, cpow, {{0, c0.inverse()}}, std::nullopt);
        throw SeriesError("inverse of an exact non-monomial series needs an explicit order");
    }
    std::int64_t limit = detail::key_limit(*ord, d);
    CycloQ5 inv0 = c0.inverse();
    std::vector<CycloQ5> g(static_cast<std::size_t>(limit));
    std::vector<std::pair<std::int64_t, CycloQ5>> rest(std::next(n.tail().begin()), n.tail().end());
    if (limit > 0) g[0] = inv0;
    for (std::int64_t m = 1; m < limit; ++m) {
        CycloQ5 s;
        bool any = false;
        for (const auto& [k, c] : rest) {
            if (k > m) break;
            const CycloQ5& prev = g[static_cast<std::size_t>(m - k)];
            if (prev.is_zero()) continue;
            s += c * prev;
            any = true;
        }
        if (any) g[static_cast<std::size_t>(m)] = -(s * inv0);
    }
    FracSeries::Tail tail;
    for (std::int64_t m = 0; m < limit; ++m)
        if (!g[static_cast<std::size_t>(m)].is_zero()) tail.emplace_hint(tail.end(), m, std::move(g[static_cast<std::size_t>(m)]));
    return {d, phase, qpow, cpow, std::move(tail), ord};
}

/// d/dτ = (2πi)·Θ with Θ q^r = r q^r. Raises cpow by one.
inline FracSeries tau_derivative(const FracSeries& f) {
    FracSeries::Tail tail;
    for (const auto& [k, c] : f.tail()) {
        BigRat r = f.qpow() + BigRat(k, f.scale());
        r.canonicalize();
        if (sgn(r) != 0) tail.emplace_hint(tail.end(), k, c * r);
    }
    return {f.scale(), f.phase(), f.qpow(), f.cpow() + 1, std::move(tail), f.order()};
}

/// Substitution τ → m·τ (q → q^m) for a positive rational m.
inline FracSeries substitute_tau_scale(const FracSeries& f, const BigRat& m) {
    if (sgn(m) <= 0) throw SeriesError("tau scale factor must be positive");
    BigRat mm = m;
    mm.canonicalize();
    std::int64_t num = to_int64(mm.get_num()), den = to_int64(mm.get_den());
    FracSeries::Tail tail;
    for (const auto& [k, c] : f.tail()) tail.emplace_hint(tail.end(), k * num, c);
    std::optional<BigRat> ord = f.order();
    if (ord) *ord *= mm;
    return {f.scale() * den, f.phase(), f.qpow() * mm, f.cpow(), std::move(tail), ord};
}

/// Substitution τ → τ + t: each q^r picks up e(r·t). Tail phases must land in Q(ζ₅).
inline FracSeries substitute_tau_shift(const FracSeries& f, const BigRat& t) {
    Phase phase = f.phase() * Phase(f.qpow() * t);
    FracSeries::Tail tail;
    for (const auto& [k, c] : f.tail()) {
        Phase p(BigRat(k, f.scale()) * t);
        tail.emplace_hint(tail.end(), k, p.is_trivial() ? c : c * phase_to_cyclo(p));
    }
    return {f.scale(), phase, f.qpow(), f.cpow(), std::move(tail), f.order()};
}

inline FracSeries operator+(const FracSeries& f, const FracSeries& g) { return series_add(f, g); }
inline FracSeries operator-(const FracSeries& f, const FracSeries& g) { return series_sub(f, g); }
inline FracSeries operator-(const FracSeries& f) { return series_neg(f); }
inline FracSeries operator*(const FracSeries& f, const FracSeries& g) { return series_mul(f, g); }
inline FracSeries operator*(const CycloQ5& s, const FracSeries& f) { return series_scale(f, s); }
inline FracSeries operator*(const FracSeries& f, const CycloQ5& s) { return series_scale(f, s); }

/// Outcome of comparing two series coefficient-wise after prefactor alignment.
struct SeriesComparison {
    bool passed = false;
    /// Relative q-orders compared above `base_exponent`; empty when both sides are exact.
    std::optional<BigRat> order_checked;
    BigRat base_exponent{0};
    std::optional<BigRat> first_mismatch_exponent;  // absolute exponent
    std::optional<CycloQ5> lhs_coeff, rhs_coeff;
    std::string reason;
};

inline SeriesComparison series_equal(const FracSeries& f, const FracSeries& g) {
    SeriesComparison out;
    if (f.cpow() != g.cpow() && !f.is_zero_tail() && !g.is_zero_tail()) {
        out.reason = "incompatible constant powers (" + std::to_string(f.cpow()) + " vs " + std::to_string(g.cpow()) + ")";
        return out;
    }
    const FracSeries& lead = f.is_zero_tail() ? g : f;
    BigRat qpow = std::min(f.qpow(), g.qpow());
    FracSeries fa, ga;
    try {
        fa = f.with_prefactor(lead.phase(), qpow);
        ga = g.with_prefactor(lead.phase(), qpow);
    } catch (const SeriesError& e) {
        out.reason = e.what();
        return out;
    }
    std::int64_t d = detail::lcm64(fa.scale(), ga.scale());
    fa = fa.rescaled(d);
    ga = ga.rescaled(d);
    out.base_exponent = qpow;
    out.order_checked = detail::min_order(fa.order(), ga.order());
    std::int64_t limit = out.order_checked ? detail::key_limit(*out.order_checked, d) : INT64_MAX;
    auto fi = fa.tail().begin(), gi = ga.tail().begin();
    while (true) {
        std::int64_t kf = fi == fa.tail().end() ? INT64_MAX : fi->first;
        std::int64_t kg = gi == ga.tail().end() ? INT64_MAX : gi->first;
        std::int64_t k = std::min(kf, kg);
        if (k == INT64_MAX || k >= limit) break;
        CycloQ5 cf = kf == k ? fi->second : CycloQ5();
        CycloQ5 cg = kg == k ? gi->second : CycloQ5();
        if (!(cf == cg)) {
            out.first_mismatch_exponent = qpow + BigRat(k, d);
            out.first_mismatch_exponent->canonicalize();
            out.lhs_coeff = cf;
            out.rhs_coeff = cg;
            out.reason = "coefficient mismatch";
            return out;
        }
        if (kf == k) ++fi;
        if (kg == k) ++gi;
    }
    out.passed = true;
    return out;
}

/// The exact polynomial Σ c_k q^{k/scale}.
inline FracSeries polynomial(const std::vector<std::pair<std::int64_t, CycloQ5>>& terms, std::int64_t scale = 1) {
    FracSeries::Tail t;
    for (const auto& [k, c] : terms) {
        auto [it, inserted] = t.emplace(k, c);
        if (!inserted) it->second += c;
    }
    return {scale, Phase(), BigRat(0), 0, std::move(t), std::nullopt};
}

}  // namespace qfive
