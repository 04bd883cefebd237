#pragma once

// Catalog of exact q-series identities. Each entry builds both sides of an
// identity at a requested order; verification compares them coefficient-wise.
// Quotients of theta constants are always cleared, so no theta constant is
// ever inverted. Powers of π are written through (2πi): 16π⁴ = (2πi)⁴,
// 4π² = −(2πi)², −2π = (2πi)·e(1/4).

#include "arith.hpp"
#include "series.hpp"
#include "theta.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

namespace qfive {

enum class Variant { AsStated, Corrected };

inline std::string to_string(Variant v) { return v == Variant::AsStated ? "as-stated" : "corrected"; }

inline std::optional<Variant> parse_variant(const std::string& s) {
    if (s == "as-stated") return Variant::AsStated;
    if (s == "corrected") return Variant::Corrected;
    return std::nullopt;
}

struct SeriesPair {
    FracSeries lhs;
    FracSeries rhs;
};

using IdentityBuilder = std::function<SeriesPair(const BigRat& order)>;

struct IdentityVariant {
    Variant kind = Variant::AsStated;
    std::string note;
    IdentityBuilder build;
};

struct IdentityEntry {
    std::string id;
    std::string title;
    std::string location;
    BigRat min_order{10};
    std::vector<IdentityVariant> variants;

    bool has(Variant v) const {
        return std::any_of(variants.begin(), variants.end(), [&](const auto& x) { return x.kind == v; });
    }

    /// The requested variant, or the as-stated one when no correction exists.
    const IdentityVariant& pick(Variant v) const {
        for (const auto& x : variants)
            if (x.kind == v) return x;
        return variants.front();
    }
};

class UnknownIdentity : public std::out_of_range {
public:
    explicit UnknownIdentity(const std::string& id) : std::out_of_range("unknown identity id: " + id) {}
};

struct IdentityReport {
    std::string id;
    std::string location;
    Variant variant = Variant::AsStated;
    bool passed = false;
    BigRat order_checked{0};
    BigRat base_exponent{0};
    std::optional<BigRat> first_mismatch_exponent;
    std::optional<CycloQ5> lhs_coeff, rhs_coeff;
    std::string reason;
    std::chrono::duration<double> elapsed{0};
};

namespace detail {

/// Shared ingredients for one builder call, memoized by characteristic.
class Kit {
public:
    explicit Kit(BigRat order) : n_(std::move(order)) {}

    const BigRat& order() const { return n_; }

    const FracSeries& th(const ThetaChar& ch, int m = 0) {
        auto key = std::make_tuple(ch.eps.get_str(), ch.eps_prime.get_str(), m);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, theta_const(ch, m, n_)).first;
        return it->second;
    }

    /// θ′[1,1], carrying (2πi)·e(1/4).
    const FracSeries& odd1() { return th(chr(1, 1, 1, 1), 1); }
    const FracSeries& odd3() { return th(chr(1, 1, 1, 1), 3); }

    /// θ^{(m)}[ch](0, 5τ), exact below the kit order.
    FracSeries th_at_5tau(const ThetaChar& ch, int m = 0) {
        BigRat inner = BigRat(floor(BigRat(n_ / 5))) + 1;
        return substitute_tau_scale(theta_const(ch, m, inner), BigRat(5)).truncated(n_);
    }

    FracSeries eta(std::initializer_list<std::pair<long, int>> spec, long denom = 1) const {
        EtaQuotientSpec s;
        for (auto [m, e] : spec) s.push_back({make_rational(m, denom), e});
        return eta_quotient(s, n_);
    }

private:
    BigRat n_;
    std::map<std::tuple<std::string, std::string, int>, FracSeries> cache_;
};

/// c·(2πi)^p as an exact constant.
inline FracSeries K(const CycloQ5& c, std::int64_t p = 0) { return FracSeries::monomial(c, Phase(), BigRat(0), p); }

inline FracSeries qmono(const BigRat& e) { return FracSeries::monomial(CycloQ5(1), Phase(), e, 0); }

inline CycloQ5 z(long k) { return CycloQ5::zeta(k); }
inline CycloQ5 s5() { return CycloQ5::sqrt5(); }
inline CycloQ5 rat(long a, long b = 1) { return CycloQ5(make_rational(a, b)); }

inline FracSeries pw(const FracSeries& f, unsigned n) { return series_pow(f, n); }

/// Guards a cleared denominator: its leading coefficient must be a unit (nonzero).
inline void require_unit_leading(const FracSeries& f, const char* what) {
    if (f.is_zero_tail() || f.tail().begin()->second.is_zero())
        throw SeriesError(std::string("denominator ") + what + " has no invertible leading term");
}

/// Σ_{n=from}^{N} c(n) qⁿ with order N+1 in absolute terms; the q-power sits in the tail.
template <class Fn>
FracSeries coefficient_series(std::int64_t from, const BigRat& order, Fn c) {
    FracSeries::Tail t;
    const std::int64_t limit = key_limit(order, 1);
    for (std::int64_t n = from; n < limit; ++n) {
        CycloQ5 v = c(n);
        if (!v.is_zero()) t.emplace(n, v);
    }
    return {1, Phase(), BigRat(0), 0, std::move(t), order};
}

/// X^10 + c1·X^5Y^5 + c2·Y^10 style sums in fifth powers of two theta constants.
inline FracSeries quadratic_in_fifths(const FracSeries& x5, const FracSeries& y5, const CycloQ5& a, const CycloQ5& b,
                                      const CycloQ5& c) {
    return a * (x5 * x5) + b * (x5 * y5) + c * (y5 * y5);
}

// ---- builders -------------------------------------------------------------

inline SeriesPair jacobi_type(Kit& k, const ThetaChar& a, const ThetaChar& b, const CycloQ5& num, const CycloQ5& c1,
                              const CycloQ5& c2) {
    const FracSeries& A = k.th(a);
    const FracSeries& B = k.th(b);
    FracSeries A5 = pw(A, 5), B5 = pw(B, 5);
    FracSeries den = quadratic_in_fifths(A5, B5, CycloQ5(1), c1, c2);
    require_unit_leading(den, "of the level-five Jacobi formula");
    FracSeries A10 = A5 * A5, B10 = B5 * B5;
    return {pw(k.odd1(), 4) * den, K(num, 4) * (A10 * A) * (B10 * B)};
}

/// θ′[x]·10θ³[a]θ³[b] = cst·θ[x]·θ′[1,1]·(c1θ⁵[a] + c2θ⁵[b]) with x = a or b.
inline SeriesPair derivative_type(Kit& k, const ThetaChar& a, const ThetaChar& b, bool second, const CycloQ5& cst,
                                  const CycloQ5& c1, const CycloQ5& c2) {
    const ThetaChar& x = second ? b : a;
    const FracSeries& A = k.th(a);
    const FracSeries& B = k.th(b);
    FracSeries A3 = pw(A, 3), B3 = pw(B, 3);
    FracSeries den = A3 * B3;
    require_unit_leading(den, "of the derivative formula");
    FracSeries num = c1 * (A3 * A * A) + c2 * (B3 * B * B);
    return {CycloQ5(10) * (k.th(x, 1) * den), cst * (k.th(x) * k.odd1() * num)};
}

/// Residue relations at z = 0 for a pair (a, b), cleared by θ²[a]θ²[b]θ′[1,1].
inline SeriesPair residue_relation(Kit& k, const ThetaChar& a, const ThetaChar& b, bool second) {
    const FracSeries &A = k.th(a), &B = k.th(b);
    const FracSeries &A1 = k.th(a, 1), &B1 = k.th(b, 1);
    const FracSeries &A2 = k.th(a, 2), &B2 = k.th(b, 2);
    const FracSeries &P = k.odd1(), &P3 = k.odd3();
    FracSeries AB = A * B, AP = A * P, BP = B * P;
    FracSeries cross = CycloQ5(4) * (A1 * B1 * AB * P);
    FracSeries rhs = P3 * AB * AB;
    if (!second) {
        FracSeries lhs = CycloQ5(2) * (A2 * B * BP * A) + B2 * A * AP * B + cross + CycloQ5(2) * (A1 * A1 * B * BP);
        return {lhs, rhs};
    }
    FracSeries lhs = A2 * B * BP * A + CycloQ5(2) * (B2 * A * AP * B) + CycloQ5(2) * (B1 * B1 * A * AP);
    return {lhs, rhs + cross};
}

/// θ″[u]/θ[du] − θ″[v]/θ[dv] = c·θ′[1,1]²·(p·X² + r·XY + s·Y²)/(50θ⁶[a]θ⁶[b]), X = θ⁵[a],
/// Y = θ⁵[b], cleared by 50θ[du]θ[dv]θ⁶[a]θ⁶[b] (less θ[a]θ[b] when {du, dv} = {a, b}).
inline SeriesPair second_derivative_difference(Kit& k, const ThetaChar& a, const ThetaChar& b, const ThetaChar& u,
                                               const ThetaChar& du, const ThetaChar& v, const ThetaChar& dv,
                                               const CycloQ5& c, const CycloQ5& p, const CycloQ5& r, const CycloQ5& s) {
    const FracSeries &A = k.th(a), &B = k.th(b);
    FracSeries A5 = pw(A, 5), B5 = pw(B, 5);
    FracSeries diff = k.th(u, 2) * k.th(dv) - k.th(v, 2) * k.th(du);
    FracSeries rhs = c * (k.odd1() * k.odd1() * quadratic_in_fifths(A5, B5, p, r, s));
    bool pair = (du == a && dv == b) || (du == b && dv == a);
    if (pair) return {CycloQ5(50) * (diff * A5 * B5), rhs};
    return {CycloQ5(50) * (diff * A5 * B5 * A * B), rhs * k.th(du) * k.th(dv)};
}

inline SeriesPair farkas_kra_type(Kit& k, const ThetaChar& a, const ThetaChar& b, const FracSeries& L) {
    const FracSeries &A = k.th(a), &B = k.th(b);
    const FracSeries &A1 = k.th(a, 1), &B1 = k.th(b, 1);
    FracSeries lhs = K(CycloQ5(3), 1) * tau_derivative(L) * A * A * B * B;
    FracSeries rhs = -(L * (A1 * A1 * B * B + B1 * B1 * A * A));
    return {lhs, rhs};
}

/// P± = Π(1−qⁿ)⁵(1 + (1±√5)/2·qⁿ + q²ⁿ)⁵/(1−q⁵ⁿ)³, factored over Q(ζ₅).
inline FracSeries golden_product(bool plus, const BigRat& order) {
    CycloQ5 r1 = plus ? z(2) : z(1), r2 = plus ? z(3) : z(4);
    return q_product({{CycloQ5(-1), 1, 0, 5}, {-r1, 1, 0, 5}, {-r2, 1, 0, 5}, {CycloQ5(-1), 5, 0, -3}}, order);
}

/// Q₁ = [Π(1−qⁿ)²/((1−q^{5n−1})⁵(1−q^{5n−4})⁵)]², Q₂ = [q·Π(1−qⁿ)²/((1−q^{5n−2})⁵(1−q^{5n−3})⁵)]².
inline FracSeries rogers_ramanujan_square(bool first, const BigRat& order) {
    std::int64_t o1 = first ? 1 : 2, o2 = first ? 4 : 3;
    FracSeries f = q_product({{CycloQ5(-1), 1, 0, 2}, {CycloQ5(-1), 5, o1, -5}, {CycloQ5(-1), 5, o2, -5}}, order);
    f = f * f;
    return first ? f : qmono(BigRat(2)) * f;
}

struct Fifths {
    FracSeries X, Y, Z;
};

inline FracSeries wronskian(const FracSeries& X, const FracSeries& Y) {
    return X * tau_derivative(Y) - Y * tau_derivative(X);
}

}  // namespace detail

/// Every catalog entry, in a fixed order.
inline const std::vector<IdentityEntry>& catalog() {
    static const std::vector<IdentityEntry> entries = [] {
        using namespace detail;
        std::vector<IdentityEntry> out;
        auto add = [&](std::string id, std::string title, std::string loc, long min_order,
                       std::vector<IdentityVariant> variants) {
            out.push_back({std::move(id), std::move(title), std::move(loc), BigRat(min_order), std::move(variants)});
        };
        auto one = [](IdentityBuilder b) { return std::vector<IdentityVariant>{{Variant::AsStated, "", std::move(b)}}; };
        auto two = [](IdentityBuilder as, IdentityBuilder fix, std::string note) {
            return std::vector<IdentityVariant>{{Variant::AsStated, "", std::move(as)},
                                                {Variant::Corrected, std::move(note), std::move(fix)}};
        };

        const ThetaChar c11_15 = chr(1, 1, 1, 5), c11_35 = chr(1, 1, 3, 5);
        const ThetaChar c15_1 = chr(1, 5, 1, 1), c35_1 = chr(3, 5, 1, 1);
        const ThetaChar c15_15 = chr(1, 5, 1, 5), c35_35 = chr(3, 5, 3, 5);
        const ThetaChar c15_35 = chr(1, 5, 3, 5), c35_95 = chr(3, 5, 9, 5);
        const ThetaChar c15_75 = chr(1, 5, 7, 5), c35_15 = chr(3, 5, 1, 5);
        const ThetaChar c15_95 = chr(1, 5, 9, 5), c35_75 = chr(3, 5, 7, 5);

        // ---- product-series identities and Jacobi's formula --------------------
        add("E1", "eta^5(tau)/eta(5tau) = 1 - 5 sum A(n) q^n", "introduction, first product-series identity", 10,
            one([](const BigRat& N) {
                Kit k(N);
                return SeriesPair{k.eta({{1, 5}, {5, -1}}),
                                  K(CycloQ5(1)) +
                                      coefficient_series(1, N, [](std::int64_t n) {
                                          return CycloQ5(-5 * divisor_sum(DivisorKernel::A, n));
                                      })};
            }));
        add("E2", "eta^5(5tau)/eta(tau) = sum B(n) q^n", "introduction, second product-series identity", 10,
            one([](const BigRat& N) {
                Kit k(N);
                return SeriesPair{k.eta({{5, 5}, {1, -1}}), coefficient_series(1, N + 1, [](std::int64_t n) {
                                      return CycloQ5(divisor_sum(DivisorKernel::B, n));
                                  })};
            }));
        add("E3", "sum p(5n+4) q^n = 5 prod (1-q^{5n})^5/(1-q^n)^6", "introduction, Ramanujan's partition identity",
            10, one([](const BigRat& N) {
                Kit k(N);
                FracSeries lhs = coefficient_series(0, N, [](std::int64_t n) { return CycloQ5(BigRat(partition_p(5 * n + 4))); });
                FracSeries rhs = K(CycloQ5(5)) * qmono(BigRat(-19, 24)) * k.eta({{5, 5}, {1, -6}});
                return SeriesPair{lhs, rhs};
            }));
        add("E4", "theta'[1,1] = -2 pi eta^3", "theta properties, triple product consequence", 10,
            one([](const BigRat& N) {
                Kit k(N);
                FracSeries m = FracSeries::monomial(CycloQ5(1), Phase::of(1, 4), BigRat(0), 1);
                return SeriesPair{k.odd1(), m * k.eta({{1, 3}})};
            }));

        // ---- level-five Jacobi formulas -------------------------------------------
        struct T1 {
            const char* id;
            ThetaChar a, b;
            CycloQ5 num, c1, c2;
            std::optional<std::pair<CycloQ5, CycloQ5>> fix;
        };
        const std::vector<T1> t1 = {
            {"T1a", c11_15, c11_35, rat(1), rat(-11), rat(-1), {}},
            {"T1b", c35_1, c15_1, z(4), rat(-11), rat(-1), {}},
            {"T1c", c15_15, c35_35, rat(1), -11 * z(4), -z(3), {}},
            {"T1d", c15_35, c35_95, rat(1), 11 * z(1), -z(2), std::pair{-11 * z(2), -z(4)}},
            {"T1e", c15_75, c35_15, z(3), -11 * z(3), -z(1), {}},
            {"T1f", c15_95, c35_75, z(3), -11 * z(1), -z(2), {}},
        };
        auto t1_builder = [](ThetaChar a, ThetaChar b, CycloQ5 num, CycloQ5 c1, CycloQ5 c2) -> IdentityBuilder {
            return [=](const BigRat& N) {
                Kit k(N);
                return jacobi_type(k, a, b, num, c1, c2);
            };
        };
        for (const auto& t : t1) {
            std::string title = "theta'[1,1]^4 = 16 pi^4 theta^11" + to_string(t.a) + " theta^11" + to_string(t.b) +
                                " / (degree-10 form)";
            std::string loc = "main theorem, formula for " + to_string(t.a) + "," + to_string(t.b);
            if (t.fix)
                add(t.id, title, loc, 20,
                    two(t1_builder(t.a, t.b, t.num, t.c1, t.c2), t1_builder(t.a, t.b, t.num, t.fix->first, t.fix->second),
                        "denominator theta^10 - 11 z^2 theta^5 theta^5 - z^4 theta^10 (z -> -z^2)"));
            else
                add(t.id, title, loc, 20, one(t1_builder(t.a, t.b, t.num, t.c1, t.c2)));
        }

        // ---- derivative formulas ----------------------------------------------------
        struct DF {
            ThetaChar a, b;
            CycloQ5 cst, a1, a2, b1, b2;
            const char* pair;
        };
        auto d_builder = [](ThetaChar a, ThetaChar b, bool second, CycloQ5 cst, CycloQ5 c1, CycloQ5 c2) -> IdentityBuilder {
            return [=](const BigRat& N) {
                Kit k(N);
                return derivative_type(k, a, b, second, cst, c1, c2);
            };
        };
        const std::vector<DF> dfs = {
            {c15_15, c35_35, rat(1), rat(1), -3 * z(4), rat(3), z(4), "(1/5,1/5),(3/5,3/5)"},
            {c15_35, c35_95, rat(-1), rat(1), 3 * z(1), rat(3), -z(1), "(1/5,3/5),(3/5,9/5)"},
            {c15_1, c35_1, -z(3), rat(1), rat(3), rat(3), rat(-1), "(1/5,1),(3/5,1)"},
            {c15_75, c35_15, -z(1), rat(1), -3 * z(3), rat(3), z(3), "(1/5,7/5),(3/5,1/5)"},
            {c15_95, c35_75, z(1), rat(1), -3 * z(1), rat(3), z(1), "(1/5,9/5),(3/5,7/5)"},
            {c11_15, c11_35, rat(1), rat(1), rat(-3), rat(3), rat(1), "(1,1/5),(1,3/5)"},
        };
        int dn = 1;
        for (const auto& d : dfs) {
            for (int which = 0; which < 2; ++which, ++dn) {
                const ThetaChar& x = which ? d.b : d.a;
                std::string id = "D" + std::to_string(dn);
                std::string title = "theta'/theta" + to_string(x) + " via theta'[1,1] and fifth powers";
                std::string loc = std::string("derivative formulas, pair ") + d.pair + (which ? ", second" : ", first");
                CycloQ5 c1 = which ? d.b1 : d.a1, c2 = which ? d.b2 : d.a2;
                if (d.a == c15_35) {
                    CycloQ5 f1 = which ? rat(3) : rat(1), f2 = which ? z(2) : -3 * z(2);
                    add(id, title, loc, 15,
                        two(d_builder(d.a, d.b, which, d.cst, c1, c2), d_builder(d.a, d.b, which, d.cst, f1, f2),
                            "same substitution z -> -z^2 as the (1/5,3/5),(3/5,9/5) Jacobi formula"));
                } else {
                    add(id, title, loc, 15, one(d_builder(d.a, d.b, which, d.cst, c1, c2)));
                }
            }
        }

        // ---- residue relations and their consequences ---------------------------
        auto rr = [](ThetaChar a, ThetaChar b, bool second) -> IdentityBuilder {
            return [=](const BigRat& N) {
                Kit k(N);
                return residue_relation(k, a, b, second);
            };
        };
        add("R1", "residue relation (first) for (1,1/5),(1,3/5)", "level-five proof, residue of phi", 10, one(rr(c11_15, c11_35, false)));
        add("R2", "residue relation (second) for (1,1/5),(1,3/5)", "level-five proof, residue of psi", 10, one(rr(c11_15, c11_35, true)));
        add("R3", "theta''/theta[1,1/5] - theta''/theta[1,3/5] as a degree-10 form",
            "level-five proof, second-derivative difference", 10, one([=](const BigRat& N) {
                Kit k(N);
                return second_derivative_difference(k, c11_15, c11_35, c11_15, c11_15, c11_35, c11_35, rat(1), rat(-4), rat(44), rat(4));
            }));
        add("R4", "residue relation (first) for (1/5,1),(3/5,1)", "mirror proof, residue of phi", 10, one(rr(c15_1, c35_1, false)));
        add("R5", "residue relation (second) for (1/5,1),(3/5,1)", "mirror proof, residue of psi", 10, one(rr(c15_1, c35_1, true)));
        add("R6", "theta''/theta[3/5,1] - theta''/theta[1/5,1] as a degree-10 form",
            "mirror proof, second-derivative difference", 10, one([=](const BigRat& N) {
                Kit k(N);
                return second_derivative_difference(k, c15_1, c35_1, c35_1, c35_1, c15_1, c15_1, z(1), rat(4), rat(44), rat(-4));
            }));
        add("R7a", "theta''/theta[3/5,3/5] - theta''/theta[1/5,1/5] as a degree-10 form",
            "remaining formulas, pair (1/5,1/5),(3/5,3/5), second-derivative difference", 10,
            two(
                [=](const BigRat& N) {
                    Kit k(N);
                    return second_derivative_difference(k, c15_15, c35_35, c35_35, c35_1, c15_15, c15_15, rat(1), rat(4),
                                                        -44 * z(4), -4 * z(3));
                },
                [=](const BigRat& N) {
                    Kit k(N);
                    return second_derivative_difference(k, c15_15, c35_35, c35_35, c35_35, c15_15, c15_15, rat(1), rat(4),
                                                        -44 * z(4), -4 * z(3));
                },
                "denominator theta[3/5,3/5] under theta''[3/5,3/5]"));

        // ---- Farkas-Kra type identities and corollaries -------------------------
        add("FK5", "d/dtau log(eta(5tau)/eta(tau)) + [(theta'/theta)^2[1,1/5] + (theta'/theta)^2[1,3/5]]/(6 pi i) = 0",
            "Farkas-Kra theorem", 10, one([=](const BigRat& N) {
                Kit k(N);
                return farkas_kra_type(k, c11_15, c11_35, k.eta({{5, 1}, {1, -1}}));
            }));
        add("FK6", "d/dtau log(eta(tau/5)/eta(tau)) + [(theta'/theta)^2[1/5,1] + (theta'/theta)^2[3/5,1]]/(6 pi i) = 0",
            "Farkas-Kra type theorem, mirror pair", 10, one([=](const BigRat& N) {
                Kit k(N);
                return farkas_kra_type(k, c15_1, c35_1, k.eta({{1, 1}, {5, -1}}, 5));
            }));
        add("C511", "(22 sqrt5/50) E1 + 5 sqrt5 E2 = ((25+11 sqrt5)/50) P+^2 - ((25-11 sqrt5)/50) P-^2",
            "first corollary of the level-five derivative formulas", 10, one([](const BigRat& N) {
                Kit k(N);
                FracSeries lhs = (rat(22, 50) * s5()) * k.eta({{1, 5}, {5, -1}}) + (5 * s5()) * k.eta({{5, 5}, {1, -1}});
                FracSeries pp = pw(golden_product(true, N), 2), pm = pw(golden_product(false, N), 2);
                FracSeries rhs = ((rat(25) + 11 * s5()) * BigRat(1, 50)) * pp - ((rat(25) - 11 * s5()) * BigRat(1, 50)) * pm;
                return SeriesPair{lhs, rhs};
            }));
        add("C521", "1 + 6 sum S(n) q^n = ((25+11 sqrt5)/50) P+^2 + ((25-11 sqrt5)/50) P-^2",
            "corollary of the Farkas-Kra theorem", 10, one([](const BigRat& N) {
                FracSeries lhs = K(CycloQ5(1)) + coefficient_series(1, N, [](std::int64_t n) {
                                     return CycloQ5(6 * divisor_sum(DivisorKernel::S, n));
                                 });
                FracSeries pp = pw(golden_product(true, N), 2), pm = pw(golden_product(false, N), 2);
                FracSeries rhs = ((rat(25) + 11 * s5()) * BigRat(1, 50)) * pp + ((rat(25) - 11 * s5()) * BigRat(1, 50)) * pm;
                return SeriesPair{lhs, rhs};
            }));
        auto ps1 = [](bool plus) -> IdentityBuilder {
            return [plus](const BigRat& N) {
                CycloQ5 sg = plus ? CycloQ5(1) : CycloQ5(-1);
                CycloQ5 lead = (rat(25) - sg * (11 * s5())) * BigRat(1, 4);
                FracSeries rhs = K(CycloQ5(1)) + coefficient_series(1, N, [&](std::int64_t n) {
                                     return lead * (CycloQ5(30 * divisor_sum(DivisorKernel::C, n)) +
                                                    sg * s5() * divisor_sum(DivisorKernel::D25, n));
                                 });
                return SeriesPair{pw(golden_product(plus, N), 2), rhs};
            };
        };
        add("PS1a", "P+^2 = 1 + ((25-11 sqrt5)/4) sum (30 C(n) + sqrt5 D25(n)) q^n", "product-series identities, first pair, plus sign", 10, one(ps1(true)));
        add("PS1b", "P-^2 = 1 + ((25+11 sqrt5)/4) sum (30 C(n) - sqrt5 D25(n)) q^n", "product-series identities, first pair, minus sign", 10, one(ps1(false)));

        add("C611", "Q1 - Q2 = 11 eta^5(5tau)/eta(tau) + eta^5(tau)/eta(5tau)", "first corollary of the mirror derivative formulas", 10,
            one([](const BigRat& N) {
                Kit k(N);
                FracSeries lhs = rogers_ramanujan_square(true, N) - rogers_ramanujan_square(false, N);
                return SeriesPair{lhs, CycloQ5(11) * k.eta({{5, 5}, {1, -1}}) + k.eta({{1, 5}, {5, -1}})};
            }));
        add("C621", "Q1 + Q2 = 1 + 6 sum S(n) q^n", "corollary of the mirror Farkas-Kra theorem", 10, one([](const BigRat& N) {
                FracSeries rhs = K(CycloQ5(1)) + coefficient_series(1, N, [](std::int64_t n) {
                                     return CycloQ5(6 * divisor_sum(DivisorKernel::S, n));
                                 });
                return SeriesPair{rogers_ramanujan_square(true, N) + rogers_ramanujan_square(false, N), rhs};
            }));
        add("PS2a", "Q1 = 1 + sum (3 C(n) + E11(n)/2) q^n", "product-series identities, second pair, first", 10,
            one([](const BigRat& N) {
                FracSeries rhs = K(CycloQ5(1)) + coefficient_series(1, N, [](std::int64_t n) {
                                     return CycloQ5(3 * divisor_sum(DivisorKernel::C, n) + divisor_sum(DivisorKernel::E11, n) / 2);
                                 });
                return SeriesPair{rogers_ramanujan_square(true, N), rhs};
            }));
        add("PS2b", "Q2 = sum (3 C(n) - E11(n)/2) q^n", "product-series identities, second pair, second", 10,
            one([](const BigRat& N) {
                FracSeries rhs = coefficient_series(1, N + 2, [](std::int64_t n) {
                    return CycloQ5(3 * divisor_sum(DivisorKernel::C, n) - divisor_sum(DivisorKernel::E11, n) / 2);
                });
                return SeriesPair{rogers_ramanujan_square(false, N), rhs};
            }));

        // ---- modular equations, differential equations, Wronskians ---------------
        auto level5 = [=](Kit& k) {
            return Fifths{pw(k.th(c11_15), 5), pw(k.th(c11_35), 5), k.eta({{1, 5}, {5, -1}})};
        };
        auto mirror5 = [=](Kit& k) {
            return Fifths{pw(k.th_at_5tau(c15_1), 5), pw(k.th_at_5tau(c35_1), 5), k.eta({{5, 5}, {1, -1}})};
        };
        auto form = [](const Fifths& f, long mid, long last) {
            return quadratic_in_fifths(f.X, f.Y, CycloQ5(1), CycloQ5(mid), CycloQ5(last));
        };
        add("ME5", "5^5 X^9 Y^9 = Z^10 (X^2 - 11XY - Y^2)^5", "modular equation of level five", 20, one([=](const BigRat& N) {
                Kit k(N);
                Fifths f = level5(k);
                return SeriesPair{CycloQ5(3125) * (pw(f.X, 9) * pw(f.Y, 9)), pw(f.Z, 10) * pw(form(f, -11, -1), 5)};
            }));
        add("ODE5", "X'Y - XY' = (2 pi i/5^(3/2)) Z (X^2 - 11XY - Y^2)", "differential equation for (X,Y)", 10,
            one([=](const BigRat& N) {
                Kit k(N);
                Fifths f = level5(k);
                FracSeries lhs = tau_derivative(f.X) * f.Y - f.X * tau_derivative(f.Y);
                return SeriesPair{lhs, K(s5() * BigRat(1, 25), 1) * f.Z * form(f, -11, -1)};
            }));
        add("W5", "W(X,Y)^10 = (2 pi i/5)^10 X^9 Y^9 (X^2 - 11XY - Y^2)^5", "Wronskian formula", 20, one([=](const BigRat& N) {
                Kit k(N);
                Fifths f = level5(k);
                FracSeries rhs = K(CycloQ5(BigRat(1, 9765625)), 10) * pw(f.X, 9) * pw(f.Y, 9) * pw(form(f, -11, -1), 5);
                return SeriesPair{pw(wronskian(f.X, f.Y), 10), rhs};
            }));
        add("ME6", "X^9 Y^9 = Z^10 (X^2 + 11XY - Y^2)^5, X,Y at 5tau", "mirror modular equation of level five", 20,
            two(
                [=](const BigRat& N) {
                    Kit k(N);
                    Fifths f = mirror5(k);
                    return SeriesPair{pw(f.X, 9) * pw(f.Y, 9), pw(f.Z, 10) * pw(form(f, 11, -1), 5)};
                },
                [=](const BigRat& N) {
                    Kit k(N);
                    Fifths f = mirror5(k);
                    return SeriesPair{pw(f.X, 9) * pw(f.Y, 9), -(pw(f.Z, 10) * pw(form(f, 11, -1), 5))};
                },
                "X^9 Y^9 + Z^10 (X^2 + 11XY - Y^2)^5 = 0"));
        add("ODE6", "X'Y - XY' = 2 pi i Z (X^2 + 11XY - Y^2), X,Y at 5tau", "mirror differential equation", 10,
            one([=](const BigRat& N) {
                Kit k(N);
                Fifths f = mirror5(k);
                FracSeries lhs = tau_derivative(f.X) * f.Y - f.X * tau_derivative(f.Y);
                return SeriesPair{lhs, K(CycloQ5(1), 1) * f.Z * form(f, 11, -1)};
            }));
        add("W6", "W(X,Y)^10 = (2 pi i)^10 X^9 Y^9 (X^2 + 11XY - Y^2)^5, X,Y at 5tau", "mirror Wronskian formula", 20,
            two(
                [=](const BigRat& N) {
                    Kit k(N);
                    Fifths f = mirror5(k);
                    FracSeries w = f.X * tau_derivative(f.X) - f.Y * tau_derivative(f.X);
                    return SeriesPair{pw(w, 10), K(CycloQ5(1), 10) * pw(f.X, 9) * pw(f.Y, 9) * pw(form(f, 11, -1), 5)};
                },
                [=](const BigRat& N) {
                    Kit k(N);
                    Fifths f = mirror5(k);
                    return SeriesPair{pw(wronskian(f.X, f.Y), 10),
                                      K(CycloQ5(-1), 10) * pw(f.X, 9) * pw(f.Y, 9) * pw(form(f, 11, -1), 5)};
                },
                "W = X Y' - Y X' and W^10 = -(2 pi i)^10 X^9 Y^9 (X^2 + 11XY - Y^2)^5"));

        // ---- intermediate steps of the proofs -------------------------------------
        add("R3-ETA", "theta''/theta[1,1/5] - theta''/theta[1,3/5] = -8 sqrt5 pi^2 eta^5(5tau)/eta(tau)",
            "level-five proof, heat equation step", 10, one([=](const BigRat& N) {
                Kit k(N);
                const FracSeries &A = k.th(c11_15), &B = k.th(c11_35);
                FracSeries lhs = k.th(c11_15, 2) * B - k.th(c11_35, 2) * A;
                return SeriesPair{lhs, K(2 * s5(), 2) * A * B * k.eta({{5, 5}, {1, -1}})};
            }));
        add("R3-THETA", "theta''/theta[1,1/5] - theta''/theta[1,3/5] = -(32 pi^4/25) theta^5 theta^5/theta'[1,1]^2",
            "level-five proof, closing step", 10, one([=](const BigRat& N) {
                Kit k(N);
                const FracSeries &A = k.th(c11_15), &B = k.th(c11_35);
                FracSeries lhs = (k.th(c11_15, 2) * B - k.th(c11_35, 2) * A) * pw(k.odd1(), 2);
                return SeriesPair{lhs, K(rat(-2, 25), 4) * pw(A, 6) * pw(B, 6)};
            }));
        add("R6-ETA", "theta''/theta[3/5,1] - theta''/theta[1/5,1] = -(8 pi^2/25) eta^5(tau/5)/eta(tau)",
            "mirror proof, heat equation step", 10, one([=](const BigRat& N) {
                Kit k(N);
                const FracSeries &A = k.th(c15_1), &B = k.th(c35_1);
                FracSeries lhs = k.th(c35_1, 2) * A - k.th(c15_1, 2) * B;
                return SeriesPair{lhs, K(rat(2, 25), 2) * A * B * k.eta({{1, 5}, {5, -1}}, 5)};
            }));
        add("R6-THETA", "theta''/theta[3/5,1] - theta''/theta[1/5,1] = -(32 pi^4/25) theta^5 theta^5/theta'[1,1]^2",
            "mirror proof, closing step", 10, one([=](const BigRat& N) {
                Kit k(N);
                const FracSeries &A = k.th(c15_1), &B = k.th(c35_1);
                FracSeries lhs = (k.th(c35_1, 2) * A - k.th(c15_1, 2) * B) * pw(k.odd1(), 2);
                return SeriesPair{lhs, K(rat(-2, 25), 4) * pw(A, 6) * pw(B, 6)};
            }));
        add("R7a-ETA", "theta''/theta[3/5,3/5] - theta''/theta[1/5,1/5] = -(8 pi^2/25) eta^5((tau+1)/5)/eta(tau+1)",
            "remaining formulas, heat equation step", 10, one([=](const BigRat& N) {
                Kit k(N);
                const FracSeries &A = k.th(c15_15), &B = k.th(c35_35);
                FracSeries lhs = k.th(c35_35, 2) * A - k.th(c15_15, 2) * B;
                FracSeries e = substitute_tau_shift(k.eta({{1, 5}, {5, -1}}, 5), BigRat(1));
                return SeriesPair{lhs, K(rat(2, 25), 2) * A * B * e};
            }));
        add("R7a-THETA", "theta''/theta[3/5,3/5] - theta''/theta[1/5,1/5] = (32 pi^4/25) theta^5 theta^5/theta'[1,1]^2",
            "remaining formulas, closing step", 10, one([=](const BigRat& N) {
                Kit k(N);
                const FracSeries &A = k.th(c15_15), &B = k.th(c35_35);
                FracSeries lhs = (k.th(c35_35, 2) * A - k.th(c15_15, 2) * B) * pw(k.odd1(), 2);
                return SeriesPair{lhs, K(rat(2, 25), 4) * pw(A, 6) * pw(B, 6)};
            }));
        add("FK5-PROD", "theta^3[1,1/5] theta^3[1,3/5]/theta'[1,1]^2 = 5 sqrt5/(4 pi^2) eta^3(5tau)/eta^3(tau)",
            "Farkas-Kra proof, product step", 10,
            two(
                [=](const BigRat& N) {
                    Kit k(N);
                    const FracSeries& A = k.th(c11_15);
                    return SeriesPair{K(CycloQ5(-1), 2) * pw(A, 6),
                                      (5 * s5()) * (pw(k.odd1(), 2) * k.eta({{5, 3}, {1, -3}}))};
                },
                [=](const BigRat& N) {
                    Kit k(N);
                    return SeriesPair{K(CycloQ5(-1), 2) * pw(k.th(c11_15), 3) * pw(k.th(c11_35), 3),
                                      (5 * s5()) * (pw(k.odd1(), 2) * k.eta({{5, 3}, {1, -3}}))};
                },
                "theta^3[1,1/5] theta^3[1,3/5] in place of theta^3[1,1/5] theta^3[1,1/5]"));
        add("FK6-PROD", "theta^3[1/5,1] theta^3[3/5,1]/theta'[1,1]^2 = z^3/(4 pi^2) eta^3(tau/5)/eta^3(tau)",
            "mirror Farkas-Kra proof, product step", 10, one([=](const BigRat& N) {
                Kit k(N);
                return SeriesPair{K(CycloQ5(-1), 2) * pw(k.th(c15_1), 3) * pw(k.th(c35_1), 3),
                                  z(3) * (pw(k.odd1(), 2) * k.eta({{1, 3}, {5, -3}}, 5))};
            }));
        add("ODE5-Z", "theta'[1,1]^2/(theta[1,1/5] theta[1,3/5]) = (4 pi^2/sqrt5) eta^5(tau)/eta(5tau)",
            "differential equation proof, Z in theta constants", 10, one([=](const BigRat& N) {
                Kit k(N);
                return SeriesPair{s5() * pw(k.odd1(), 2), K(CycloQ5(-1), 2) * k.th(c11_15) * k.th(c11_35) * k.eta({{1, 5}, {5, -1}})};
            }));
        add("ODE6-Z", "theta'[1,1]^2/(theta[1/5,1] theta[3/5,1]) = (4 pi^2/z) eta^5(tau)/eta(tau/5)",
            "mirror differential equation proof, Z in theta constants", 10, one([=](const BigRat& N) {
                Kit k(N);
                return SeriesPair{z(1) * pw(k.odd1(), 2),
                                  K(CycloQ5(-1), 2) * k.th(c15_1) * k.th(c35_1) * k.eta({{5, 5}, {1, -1}}, 5)};
            }));
        add("ODE6-TILDE", "X~'Y~ - X~Y~' = (2 pi i/5) Z~ (X~^2 + 11X~Y~ - Y~^2) at tau",
            "mirror differential equation proof, before tau -> 5tau", 10, one([=](const BigRat& N) {
                Kit k(N);
                FracSeries X = pw(k.th(c15_1), 5), Y = pw(k.th(c35_1), 5);
                FracSeries Z = k.eta({{5, 5}, {1, -1}}, 5);
                FracSeries lhs = tau_derivative(X) * Y - X * tau_derivative(Y);
                return SeriesPair{lhs, K(rat(1, 5), 1) * Z * quadratic_in_fifths(X, Y, CycloQ5(1), CycloQ5(11), CycloQ5(-1))};
            }));
        add("ME5-SQ", "Z^2 (X^2 - 11XY - Y^2) = 5 theta^9[1,1/5] theta^9[1,3/5]", "modular equation proof, square root form", 10,
            one([=](const BigRat& N) {
                Kit k(N);
                Fifths f = level5(k);
                return SeriesPair{pw(f.Z, 2) * form(f, -11, -1), CycloQ5(5) * (pw(k.th(c11_15), 9) * pw(k.th(c11_35), 9))};
            }));
        add("ME6-SQ", "Z~^2 (Y~^2 - 11X~Y~ - X~^2) = z theta^9[1/5,1] theta^9[3/5,1]",
            "mirror modular equation proof, square root form", 10, one([=](const BigRat& N) {
                Kit k(N);
                FracSeries X = pw(k.th(c15_1), 5), Y = pw(k.th(c35_1), 5);
                FracSeries Z = k.eta({{5, 5}, {1, -1}}, 5);
                FracSeries lhs = pw(Z, 2) * quadratic_in_fifths(X, Y, CycloQ5(-1), CycloQ5(-11), CycloQ5(1));
                return SeriesPair{lhs, z(1) * (pw(k.th(c15_1), 9) * pw(k.th(c35_1), 9))};
            }));
        add("C611-Y", "Q1(y) - Q2(y) = 11 eta^5(tau)/eta(tau/5) + eta^5(tau/5)/eta(tau), y = q^(1/5)",
            "mirror corollary proof, before tau -> 5tau", 10, one([](const BigRat& N) {
                Kit k(N);
                BigRat inner = 5 * N;
                FracSeries lhs = substitute_tau_scale(rogers_ramanujan_square(true, inner), BigRat(1, 5)) -
                                 substitute_tau_scale(rogers_ramanujan_square(false, inner), BigRat(1, 5));
                return SeriesPair{lhs, CycloQ5(11) * k.eta({{5, 5}, {1, -1}}, 5) + k.eta({{1, 5}, {5, -1}}, 5)};
            }));

        // ---- structural properties of theta constants ----------------------------
        const auto chars = catalog_characteristics();
        for (std::size_t i = 0; i < chars.size(); ++i) {
            char num[4];
            std::snprintf(num, sizeof num, "%02zu", i + 1);
            ThetaChar ch = chars[i];
            add(std::string("HEAT-") + num, "theta''" + to_string(ch) + " = 4 pi i d/dtau theta" + to_string(ch),
                "heat equation", 10, one([ch](const BigRat& N) {
                    return SeriesPair{theta_const(ch, 2, N),
                                      CycloQ5(2) * (FracSeries::two_pi_i(1) * tau_derivative(theta_const(ch, 0, N)))};
                }));
        }
        for (std::size_t i = 0; i < chars.size(); ++i) {
            char num[4];
            std::snprintf(num, sizeof num, "%02zu", i + 1);
            ThetaChar ch = chars[i];
            add(std::string("TP-EQ-") + num, "Fourier sum = triple product for theta" + to_string(ch),
                "Jacobi triple product", 10, one([ch](const BigRat& N) {
                    return SeriesPair{theta_const(ch, 0, N), theta_const_product(ch, N)};
                }));
        }
        struct Shift {
            ThetaChar ch;
            long m, n;
            int deriv;
        };
        const std::vector<Shift> shifts = {{c35_95, 0, -1, 0}, {c15_15, 1, 0, 0}, {c15_75, 0, -1, 0}, {c35_75, -1, 1, 1}};
        int sn = 1;
        for (const auto& s : shifts) {
            auto [phase, shifted] = char_shift_phase(s.ch, s.m, s.n);
            std::string id = "SHIFT-0" + std::to_string(sn++);
            add(id, "theta" + std::string(s.deriv ? "'" : "") + to_string(shifted) + " = " + to_string(phase) + " theta" +
                        (s.deriv ? "'" : "") + to_string(s.ch),
                "characteristic shift rule", 10, one([s, phase, shifted](const BigRat& N) {
                    return SeriesPair{theta_const(shifted, s.deriv, N),
                                      FracSeries::monomial(CycloQ5(1), phase, BigRat(0), 0) * theta_const(s.ch, s.deriv, N)};
                }));
        }
        add("SHIFT-05", "theta" + to_string(negate(c15_35)) + " = theta" + to_string(c15_35),
            "characteristic negation rule", 10, one([=](const BigRat& N) {
                return SeriesPair{theta_const(negate(c15_35), 0, N), theta_const(c15_35, 0, N)};
            }));
        add("SHIFT-06", "theta'" + to_string(negate(c35_95)) + " = -theta'" + to_string(c35_95),
            "characteristic negation rule", 10, one([=](const BigRat& N) {
                return SeriesPair{theta_const(negate(c35_95), 1, N), -theta_const(c35_95, 1, N)};
            }));
        return out;
    }();
    return entries;
}

inline const IdentityEntry& lookup(const std::string& id) {
    for (const auto& e : catalog())
        if (e.id == id) return e;
    throw UnknownIdentity(id);
}

/// Builds and compares one identity. The build order is raised if alignment of the
/// two sides leaves fewer than `order` checked q-orders.
inline IdentityReport verify(const std::string& id, const BigRat& order, Variant variant = Variant::AsStated) {
    const IdentityEntry& entry = lookup(id);
    if (sgn(order) <= 0) throw std::invalid_argument("verify: order must be positive");
    const IdentityVariant& v = entry.pick(variant);
    IdentityReport r;
    r.id = entry.id;
    r.location = entry.location;
    r.variant = v.kind;
    r.order_checked = order;
    auto start = std::chrono::steady_clock::now();
    BigRat internal = order;
    for (int attempt = 0; attempt < 4; ++attempt) {
        SeriesComparison cmp;
        try {
            SeriesPair p = v.build(internal);
            if (p.lhs.cpow() != p.rhs.cpow() && !p.lhs.is_zero_tail() && !p.rhs.is_zero_tail())
                throw SeriesError("sides carry different powers of 2*pi*i");
            cmp = series_equal(p.lhs, p.rhs);
        } catch (const std::exception& e) {
            r.passed = false;
            r.reason = std::string("builder error: ") + e.what();
            break;
        }
        r.passed = cmp.passed;
        r.base_exponent = cmp.base_exponent;
        r.reason = cmp.reason;
        r.first_mismatch_exponent = cmp.first_mismatch_exponent;
        r.lhs_coeff = cmp.lhs_coeff;
        r.rhs_coeff = cmp.rhs_coeff;
        if (cmp.order_checked) r.order_checked = *cmp.order_checked;
        if (!cmp.passed || !cmp.order_checked || *cmp.order_checked >= order) break;
        internal += order - *cmp.order_checked + 1;
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

/// Verifies every entry. Reports come back in catalog order whether or not the work
/// is spread over threads.
inline std::vector<IdentityReport> verify_all(const BigRat& order, bool parallel = false,
                                              Variant variant = Variant::AsStated) {
    const auto& entries = catalog();
    std::vector<IdentityReport> out(entries.size());
    if (!parallel) {
        for (std::size_t i = 0; i < entries.size(); ++i) out[i] = verify(entries[i].id, order, variant);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) out[i] = verify(entries[i].id, order, variant);
    };
    unsigned n = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace qfive
