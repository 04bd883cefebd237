#pragma once

// Double-precision companion: θ[ε,ε′](z,τ) and its z-derivatives, contour
// residues, and the z-dependent relations that the exact layer cannot reach.

#include "series.hpp"
#include "theta.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qfive {

using cplx = std::complex<double>;

class NumericDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct ComplexPoint {
    cplx z{0.0, 0.0};
    cplx tau{0.0, 1.0};
};

struct NumericConfig {
    double tail_tolerance = 1e-17;
    int contour_samples = 256;
    std::uint64_t rng_seed = 20240501;
    double re_tau_min = -0.5, re_tau_max = 0.5;
    double im_tau_min = 0.8, im_tau_max = 2.0;

    void validate() const {
        if (!(tail_tolerance > 0)) throw std::invalid_argument("tail_tolerance must be positive");
        if (contour_samples < 64) throw std::invalid_argument("contour_samples must be at least 64");
        if (!(re_tau_min <= re_tau_max) || !(im_tau_min <= im_tau_max) || !(im_tau_min > 0))
            throw std::invalid_argument("sample region must be nonempty and above the real axis");
    }
};

namespace detail {

inline constexpr double kPi = std::numbers::pi;
inline const cplx kTwoPiI{0.0, 2.0 * kPi};

/// Largest |a| = |n + ε/2| reached by the sum; the Gaussian factor e^{−π a² Im τ}
/// beats (2π|a|)^m e^{2π|a||Im z|} beyond it by tail_tolerance.
inline double theta_reach(const ComplexPoint& p, int m, double tol) {
    const double t = p.tau.imag();
    const double y = std::abs(p.z.imag());
    double a = 1.0 + 2.0 * y / t;
    auto bound = [&](double x) {
        return std::exp(-kPi * x * x * t + 2.0 * kPi * x * y) * std::pow(2.0 * kPi * x, m) / (1.0 - std::exp(-kPi * t));
    };
    while (bound(a) > tol && a < 1e4) a += 0.5;
    return a + 1.0;
}

}  // namespace detail

/// θ^{(m)}[ε,ε′](z,τ) summed over every n with |n + ε/2| ≤ reach.
inline cplx theta_num_fixed(const ComplexPoint& p, const ThetaChar& ch, int m, double reach) {
    if (!(p.tau.imag() > 0)) throw NumericDomainError("theta_num: Im(tau) must be positive");
    const double eps = ch.eps.get_d(), epsp = ch.eps_prime.get_d();
    const long lo = static_cast<long>(std::floor(-reach - eps / 2)), hi = static_cast<long>(std::ceil(reach - eps / 2));
    cplx acc = 0;
    for (long n = lo; n <= hi; ++n) {
        const double a = static_cast<double>(n) + eps / 2;
        if (std::abs(a) > reach) continue;
        cplx term = std::exp(detail::kTwoPiI * (0.5 * a * a * p.tau + a * (p.z + epsp / 2)));
        if (m > 0) term *= std::pow(detail::kTwoPiI * a, m);
        acc += term;
    }
    return acc;
}

inline cplx theta_num(const ComplexPoint& p, const ThetaChar& ch, int m, const NumericConfig& cfg = {}) {
    if (!(p.tau.imag() > 0)) throw NumericDomainError("theta_num: Im(tau) must be positive");
    if (m < 0) throw std::invalid_argument("theta_num: derivative order must be non-negative");
    return theta_num_fixed(p, ch, m, detail::theta_reach(p, m, cfg.tail_tolerance));
}

/// d²/dz² log θ[ε,ε′](z,τ) from the triple product; valid for |ε| ≤ 1.
inline cplx log_theta_second(const ComplexPoint& p, const ThetaChar& ch) {
    if (!(p.tau.imag() > 0)) throw NumericDomainError("log_theta_second: Im(tau) must be positive");
    const double eps = ch.eps.get_d(), epsp = ch.eps_prime.get_d();
    if (std::abs(eps) > 1) throw std::invalid_argument("log_theta_second: need |eps| <= 1");
    const cplx x = std::exp(cplx(0, detail::kPi) * p.tau);
    const cplx w = std::exp(detail::kTwoPiI * p.z);
    const cplx up = std::exp(cplx(0, detail::kPi * epsp)), down = 1.0 / up;
    cplx acc = 0;
    for (int n = 1; n < 400; ++n) {
        cplx a = up * std::pow(x, 2.0 * n - 1 + eps), b = down * std::pow(x, 2.0 * n - 1 - eps);
        cplx ta = a * w / ((1.0 + a * w) * (1.0 + a * w)), tb = b / w / ((1.0 + b / w) * (1.0 + b / w));
        acc += ta + tb;
        if (std::abs(ta) + std::abs(tb) < 1e-18 * (1.0 + std::abs(acc)) && n > 2) break;
    }
    return detail::kTwoPiI * detail::kTwoPiI * acc;
}

/// (1/2πi)∮ f over the circle |z − center| = radius, trapezoidal rule.
inline cplx residue_num(const std::function<cplx(cplx)>& f, cplx center, double radius, const NumericConfig& cfg = {}) {
    cfg.validate();
    if (!(radius > 0)) throw std::invalid_argument("residue_num: radius must be positive");
    const int n = cfg.contour_samples;
    cplx acc = 0;
    for (int k = 0; k < n; ++k) {
        cplx u = std::polar(radius, 2.0 * detail::kPi * k / n);
        cplx v = f(center + u);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NumericDomainError("residue_num: non-finite sample at z = " + std::to_string((center + u).real()) + "+" +
                                     std::to_string((center + u).imag()) + "i");
        acc += v * u;
    }
    return acc / static_cast<double>(n);
}

/// Numeric value of (2πi)^cpow · e(phase) · q^qpow · Σ c_k q^{k/D} at τ.
inline cplx series_eval_num(const FracSeries& f, cplx tau) {
    if (!(tau.imag() > 0)) throw NumericDomainError("series_eval_num: Im(tau) must be positive");
    cplx acc = 0;
    for (const auto& [k, c] : f.tail()) acc += c.embed() * std::exp(detail::kTwoPiI * tau * f.exponent_of(k).get_d());
    return acc * f.phase().embed() * std::pow(detail::kTwoPiI, static_cast<double>(f.cpow()));
}

/// Sample i of a seeded run; each sample has its own generator so runs split freely.
inline ComplexPoint sample_point(const NumericConfig& cfg, std::uint64_t i) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.rng_seed), static_cast<std::uint32_t>(cfg.rng_seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> re(cfg.re_tau_min, cfg.re_tau_max), im(cfg.im_tau_min, cfg.im_tau_max),
        unit(-0.5, 0.5);
    ComplexPoint p;
    p.tau = cplx(re(rng), im(rng));
    p.z = cplx(unit(rng), unit(rng) * 0.5);
    return p;
}

struct NumericCheck {
    std::string id;
    std::string title;
    bool passed = false;
    double max_residual = 0;
    double tolerance = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::string reason;
};

// ---- z-dependent relations ---------------------------------------------------

enum class ThreeTerm { First, Second };

/// Residual of one three-term relation among θ(z) values, normalized by its largest term.
inline double three_term_residual(ThreeTerm which, const ComplexPoint& p, const NumericConfig& cfg) {
    auto th = [&](const ThetaChar& ch, bool at_z) { return theta_num({at_z ? p.z : cplx(0), p.tau}, ch, 0, cfg); };
    const cplx z2 = CycloQ5::zeta(2).embed(), z3 = CycloQ5::zeta(3).embed();
    cplx t1, t2, t3;
    if (which == ThreeTerm::First) {
        cplx a = th(chr(1, 1, 1, 5), false), b = th(chr(1, 1, 3, 5), false);
        t1 = b * b * th(chr(1, 1, 1, 5), true) * th(chr(1, 1, 9, 5), true);
        t2 = -a * a * th(chr(1, 1, 3, 5), true) * th(chr(1, 1, 7, 5), true);
        t3 = a * b * std::pow(th(chr(1, 1, 1, 1), true), 2);
    } else {
        cplx a = th(chr(1, 5, 1, 1), false), b = th(chr(3, 5, 1, 1), false);
        t1 = -z2 * b * b * th(chr(1, 5, 1, 1), true) * th(chr(9, 5, 1, 1), true);
        t2 = z3 * a * a * th(chr(3, 5, 1, 1), true) * th(chr(7, 5, 1, 1), true);
        t3 = a * b * std::pow(th(chr(1, 1, 1, 1), true), 2);
    }
    double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
    return scale == 0 ? 0.0 : std::abs(t1 + t2 + t3) / scale;
}

inline double check_three_term(ThreeTerm which, int samples, const NumericConfig& cfg = {}) {
    double worst = 0;
    for (int i = 0; i < samples; ++i) worst = std::max(worst, three_term_residual(which, sample_point(cfg, static_cast<std::uint64_t>(i)), cfg));
    return worst;
}

/// (θ′/θ)² − θ″/θ + (log θ)″ at one point, relative to the largest of the three.
inline double log_second_derivative_residual(const ComplexPoint& p, const ThetaChar& ch, const NumericConfig& cfg) {
    cplx t0 = theta_num(p, ch, 0, cfg), t1 = theta_num(p, ch, 1, cfg), t2 = theta_num(p, ch, 2, cfg);
    cplx a = (t1 / t0) * (t1 / t0), b = t2 / t0, c = log_theta_second(p, ch);
    double scale = std::max({std::abs(a), std::abs(b), std::abs(c), 1.0});
    return std::abs(a - b + c) / scale;
}

/// Cycles the catalog characteristics over the sample points.
inline double check_log_second_derivative(int samples, const NumericConfig& cfg = {}) {
    const auto chars = catalog_characteristics();
    double worst = 0;
    for (int i = 0; i < samples; ++i)
        worst = std::max(worst, log_second_derivative_residual(sample_point(cfg, static_cast<std::uint64_t>(i)),
                                                 chars[static_cast<std::size_t>(i) % chars.size()], cfg));
    return worst;
}

/// The six (a, b, c) setups whose elliptic functions θ²[a]θ[b]/θ³[1,1] and
/// θ²[b]θ[c]/θ³[1,1] have a single pole at 0 in the period cell.
struct ResidueSetup {
    ThetaChar a, b, c;
};

inline std::vector<ResidueSetup> residue_setups() {
    return {{chr(1, 1, 1, 5), chr(1, 1, 3, 5), chr(1, 1, -1, 5)},  {chr(1, 5, 1, 1), chr(3, 5, 1, 1), chr(-1, 5, 1, 1)},
            {chr(1, 5, 1, 5), chr(3, 5, 3, 5), chr(-1, 5, -1, 5)}, {chr(1, 5, 3, 5), chr(3, 5, 9, 5), chr(-1, 5, -3, 5)},
            {chr(1, 5, 7, 5), chr(3, 5, 1, 5), chr(-1, 5, 3, 5)},  {chr(1, 5, 9, 5), chr(3, 5, -3, 5), chr(-1, 5, 1, 5)}};
}

inline double contour_radius(cplx tau) { return 0.1 * std::min(1.0, tau.imag()); }

/// |Res φ| and |Res ψ| at z = 0 for one setup.
inline std::pair<double, double> setup_residues(const ResidueSetup& s, cplx tau, const NumericConfig& cfg) {
    const ThetaChar odd = chr(1, 1, 1, 1);
    auto th = [&](const ThetaChar& ch, cplx z) { return theta_num({z, tau}, ch, 0, cfg); };
    auto phi = [&](cplx z) { return th(s.a, z) * th(s.a, z) * th(s.b, z) / std::pow(th(odd, z), 3); };
    auto psi = [&](cplx z) { return th(s.b, z) * th(s.b, z) * th(s.c, z) / std::pow(th(odd, z), 3); };
    double r = contour_radius(tau);
    return {std::abs(residue_num(phi, 0, r, cfg)), std::abs(residue_num(psi, 0, r, cfg))};
}

/// θ(z + τ) against e^{2πi(−ε′/2 − z − τ/2)} θ(z), and θ(z + 1) against e^{πiε} θ(z).
inline double quasi_periodicity_residual(const ComplexPoint& p, const ThetaChar& ch, const NumericConfig& cfg) {
    const double eps = ch.eps.get_d(), epsp = ch.eps_prime.get_d();
    cplx base = theta_num(p, ch, 0, cfg);
    cplx shifted = theta_num({p.z + p.tau, p.tau}, ch, 0, cfg);
    cplx factor = std::exp(detail::kTwoPiI * (-epsp / 2 - p.z - p.tau / 2.0));
    cplx one = theta_num({p.z + 1.0, p.tau}, ch, 0, cfg);
    cplx factor1 = std::exp(cplx(0, detail::kPi * eps));
    double s1 = std::max(std::abs(shifted), 1.0), s2 = std::max(std::abs(one), 1.0);
    return std::max(std::abs(shifted - factor * base) / s1, std::abs(one - factor1 * base) / s2);
}

/// |θ[ε,ε′]((1−ε)/2·τ + (1−ε′)/2, τ)|.
inline double zero_location_residual(cplx tau, const ThetaChar& ch, const NumericConfig& cfg) {
    const double eps = ch.eps.get_d(), epsp = ch.eps_prime.get_d();
    cplx z = (1 - eps) / 2 * tau + (1 - epsp) / 2;
    return std::abs(theta_num({z, tau}, ch, 0, cfg));
}

/// Analytic θ′ against a central difference, relative error.
inline double derivative_fd_residual(const ComplexPoint& p, const ThetaChar& ch, const NumericConfig& cfg) {
    const double h = 1e-5;
    cplx fd = (theta_num({p.z + h, p.tau}, ch, 0, cfg) - theta_num({p.z - h, p.tau}, ch, 0, cfg)) / (2 * h);
    cplx an = theta_num(p, ch, 1, cfg);
    return std::abs(fd - an) / std::max(std::abs(an), 1.0);
}

// ---- numeric suite -------------------------------------------------------------

struct NumericSuiteEntry {
    std::string id;
    std::string title;
    double tolerance;
    int default_samples;
    std::function<double(int samples, const NumericConfig&)> run;
};

inline const std::vector<NumericSuiteEntry>& numeric_suite() {
    static const std::vector<NumericSuiteEntry> suite = {
        {"N1", "three-term theta relations in z (both forms)", 1e-8, 20,
         [](int n, const NumericConfig& cfg) {
             return std::max(check_three_term(ThreeTerm::First, n, cfg), check_three_term(ThreeTerm::Second, n, cfg));
         }},
        {"N2", "(theta'/theta)^2 = theta''/theta - (log theta)''", 1e-8, 20,
         [](int n, const NumericConfig& cfg) { return check_log_second_derivative(n, cfg); }},
        {"N3", "residues at 0 of the six phi/psi elliptic functions", 1e-8, 5,
         [](int n, const NumericConfig& cfg) {
             double worst = 0;
             for (int i = 0; i < n; ++i) {
                 cplx tau = sample_point(cfg, static_cast<std::uint64_t>(i)).tau;
                 for (const auto& s : residue_setups()) {
                     auto [a, b] = setup_residues(s, tau, cfg);
                     worst = std::max({worst, a, b});
                 }
             }
             return worst;
         }},
        {"N4", "quasi-periodicity in z -> z + tau and z -> z + 1", 1e-9, 50,
         [](int n, const NumericConfig& cfg) {
             const auto chars = catalog_characteristics();
             double worst = 0;
             for (int i = 0; i < n; ++i)
                 worst = std::max(worst, quasi_periodicity_residual(sample_point(cfg, static_cast<std::uint64_t>(i)),
                                                                    chars[static_cast<std::size_t>(i) % chars.size()], cfg));
             return worst;
         }},
        {"N5", "zero at (1-eps)/2 tau + (1-eps')/2", 1e-9, 12,
         [](int n, const NumericConfig& cfg) {
             const auto chars = catalog_characteristics();
             double worst = 0;
             for (int i = 0; i < n; ++i)
                 worst = std::max(worst, zero_location_residual(sample_point(cfg, static_cast<std::uint64_t>(i)).tau,
                                                                chars[static_cast<std::size_t>(i) % chars.size()], cfg));
             return worst;
         }},
        {"N6", "analytic theta' against a central difference", 1e-6, 3,
         [](int n, const NumericConfig& cfg) {
             const auto chars = catalog_characteristics();
             double worst = 0;
             for (int i = 0; i < n; ++i)
                 worst = std::max(worst, derivative_fd_residual(sample_point(cfg, static_cast<std::uint64_t>(i)),
                                                                chars[static_cast<std::size_t>(i) % chars.size()], cfg));
             return worst;
         }},
        {"N7", "exact theta constants evaluated at tau = 0.2 + 1.4i against theta_num", 1e-9, 1,
         [](int, const NumericConfig& cfg) {
             const cplx tau(0.2, 1.4);
             double worst = 0;
             for (const auto& ch : catalog_characteristics())
                 for (int m = 0; m <= 3; ++m) {
                     cplx exact = series_eval_num(theta_const(ch, m, BigRat(12)), tau);
                     cplx direct = theta_num({0, tau}, ch, m, cfg);
                     double scale = std::abs(direct);
                     worst = std::max(worst, scale < 1e-12 ? std::abs(exact) : std::abs(exact - direct) / scale);
                 }
             return worst;
         }},
    };
    return suite;
}

/// Runs one suite entry; samples ≤ 0 selects the entry default, tol ≤ 0 its tolerance.
inline NumericCheck run_numeric(const std::string& id, int samples = 0, const NumericConfig& cfg = {}, double tol = 0) {
    cfg.validate();
    for (const auto& e : numeric_suite()) {
        if (e.id != id) continue;
        NumericCheck out;
        out.id = e.id;
        out.title = e.title;
        out.samples = samples > 0 ? samples : e.default_samples;
        out.tolerance = tol > 0 ? tol : e.tolerance;
        out.seed = cfg.rng_seed;
        try {
            out.max_residual = e.run(out.samples, cfg);
            out.passed = out.max_residual < out.tolerance;
            if (!out.passed) out.reason = "residual above tolerance";
        } catch (const std::exception& ex) {
            out.passed = false;
            out.reason = ex.what();
        }
        return out;
    }
    throw std::out_of_range("unknown numeric check id: " + id);
}

}  // namespace qfive
