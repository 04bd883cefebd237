#include "oracles.hpp"

#include <qfive/numeric.hpp>

#include <gtest/gtest.h>

using namespace qfive;

TEST(ThetaNum, MatchesFixedWidthOracleSum) {
    NumericConfig cfg;
    for (int i = 0; i < 10; ++i) {
        ComplexPoint p = sample_point(cfg, static_cast<std::uint64_t>(i));
        for (const auto& ch : catalog_characteristics())
            for (int m = 0; m <= 2; ++m) {
                cplx got = theta_num(p, ch, m, cfg);
                cplx want = oracle::theta_sum(ch.eps.get_d(), ch.eps_prime.get_d(), m, p.z, p.tau);
                EXPECT_LT(std::abs(got - want), 1e-12 * std::max(1.0, std::abs(want)));
            }
    }
}

TEST(ThetaNum, TailBoundHonoredWhenReachDoubles) {
    NumericConfig cfg;
    for (int i = 0; i < 20; ++i) {
        ComplexPoint p = sample_point(cfg, static_cast<std::uint64_t>(i));
        for (int m : {0, 3}) {
            double reach = detail::theta_reach(p, m, cfg.tail_tolerance);
            cplx a = theta_num_fixed(p, chr(1, 5, 7, 5), m, reach);
            cplx b = theta_num_fixed(p, chr(1, 5, 7, 5), m, 2 * reach);
            EXPECT_LT(std::abs(a - b), 10 * cfg.tail_tolerance + 1e-15 * std::abs(b));
        }
    }
}

TEST(ThetaNum, RejectsLowerHalfPlane) {
    EXPECT_THROW(theta_num({0.0, {0.3, 0.0}}, chr(1, 1, 1, 5), 0), NumericDomainError);
    EXPECT_THROW(theta_num({0.0, {0.3, -1.0}}, chr(1, 1, 1, 5), 0), NumericDomainError);
}

TEST(ThetaNum, EvenCharacteristicHasZeroDerivativeAtOrigin) {
    ComplexPoint p{0.0, {0.1, 1.2}};
    EXPECT_LT(std::abs(theta_num(p, chr(0, 1, 0, 1), 1)), 1e-14);
    EXPECT_LT(log_second_derivative_residual(p, chr(0, 1, 0, 1), {}), 1e-12);
}

TEST(Residue, SimplePoleAndRegularFunction) {
    cplx r = residue_num([](cplx z) { return 1.0 / z; }, 0.0, 0.1);
    EXPECT_LT(std::abs(r - 1.0), 1e-12);
    cplx c = residue_num([](cplx z) { return 3.0 / (z - 0.02) + std::exp(z); }, 0.0, 0.1);
    EXPECT_LT(std::abs(c - 3.0), 1e-12);
    EXPECT_LT(std::abs(residue_num([](cplx z) { return z * z; }, 0.0, 0.1)), 1e-14);
}

TEST(Residue, NonFiniteSampleThrows) {
    EXPECT_THROW(residue_num([](cplx z) { return 1.0 / (z - 0.1); }, 0.0, 0.1), NumericDomainError);
    NumericConfig bad;
    bad.contour_samples = 16;
    EXPECT_THROW(residue_num([](cplx z) { return z; }, 0.0, 0.1, bad), std::invalid_argument);
}

TEST(Residue, DetectsNonzeroResidueOfMismatchedQuotient) {
    // θ²[a]θ[a]/θ³[1,1] is not elliptic for these characteristics and carries a pole with residue.
    cplx tau(0.1, 1.1);
    NumericConfig cfg;
    auto f = [&](cplx z) {
        return std::pow(theta_num({z, tau}, chr(1, 1, 1, 5), 0, cfg), 3) / std::pow(theta_num({z, tau}, chr(1, 1, 1, 1), 0, cfg), 3);
    };
    EXPECT_GT(std::abs(residue_num(f, 0.0, contour_radius(tau), cfg)), 1e-3);
}

TEST(Residue, EllipticSetupsVanishAtFiveTaus) {
    NumericConfig cfg;
    for (int i = 0; i < 5; ++i) {
        cplx tau = sample_point(cfg, static_cast<std::uint64_t>(i)).tau;
        for (const auto& s : residue_setups()) {
            auto [phi, psi] = setup_residues(s, tau, cfg);
            EXPECT_LT(phi, 1e-8);
            EXPECT_LT(psi, 1e-8);
        }
    }
}

TEST(ThreeTermRelation, BothFormsHold) {
    EXPECT_LT(check_three_term(ThreeTerm::First, 20), 1e-9);
    EXPECT_LT(check_three_term(ThreeTerm::Second, 20), 1e-9);
}

TEST(ThreeTermRelation, ReducesAtOrigin) {
    EXPECT_LT(three_term_residual(ThreeTerm::First, {0.0, {0.2, 1.1}}, {}), 1e-13);
}

TEST(LogSecondDerivative, RelationHoldsAndMatchesSpotPoint) {
    EXPECT_LT(check_log_second_derivative(20), 1e-8);
    EXPECT_LT(log_second_derivative_residual({{0.13, 0.07}, {0.0, 1.3}}, chr(1, 5, 1, 5), {}), 1e-8);
}

TEST(LogSecondDerivative, ProductRouteAgreesWithQuotientRule) {
    ComplexPoint p{{0.21, -0.05}, {-0.2, 1.05}};
    const double h = 1e-4;
    for (const auto& ch : catalog_characteristics()) {
        auto th = [&](cplx z) { return theta_num({z, p.tau}, ch, 0); };
        cplx mid = th(p.z);
        cplx fd = (std::log(th(p.z + h) / mid) + std::log(th(p.z - h) / mid)) / (h * h);
        EXPECT_LT(std::abs(fd - log_theta_second(p, ch)), 1e-4 * std::max(1.0, std::abs(fd)));
    }
}

TEST(Periodicity, QuasiPeriodsAtFiftyPoints) {
    NumericConfig cfg;
    const auto chars = catalog_characteristics();
    for (int i = 0; i < 50; ++i)
        EXPECT_LT(quasi_periodicity_residual(sample_point(cfg, static_cast<std::uint64_t>(i)), chars[i % 12], cfg), 1e-9);
}

TEST(Zeros, SingleZeroLocation) {
    NumericConfig cfg;
    for (int i = 0; i < 12; ++i) {
        cplx tau = sample_point(cfg, static_cast<std::uint64_t>(i)).tau;
        for (const auto& ch : catalog_characteristics()) EXPECT_LT(zero_location_residual(tau, ch, cfg), 1e-9);
        EXPECT_GT(std::abs(theta_num({0.0, tau}, chr(1, 1, 1, 5), 0, cfg)), 1e-3);
    }
}

TEST(Derivative, AnalyticMatchesFiniteDifference) {
    NumericConfig cfg;
    for (int i = 0; i < 3; ++i)
        EXPECT_LT(derivative_fd_residual(sample_point(cfg, static_cast<std::uint64_t>(i)), chr(3, 5, 9, 5), cfg), 1e-6);
}

TEST(Bridge, SeriesEvaluationMatchesDirectSums) {
    EXPECT_LT(std::abs(series_eval_num(FracSeries::one(), {0.0, 1.0}) - 1.0), 1e-15);
    const cplx tau(0.0, 1.1);
    EXPECT_LT(std::abs(series_eval_num(eta_q(BigRat(1), BigRat(40)), tau) - oracle::eta(tau)), 1e-10);
    const cplx tau2(0.2, 1.4);
    cplx exact = series_eval_num(theta_const(chr(1, 1, 1, 5), 0, BigRat(12)), tau2);
    cplx direct = theta_num({0.0, tau2}, chr(1, 1, 1, 5), 0);
    EXPECT_LT(std::abs(exact - direct) / std::abs(direct), 1e-9);
}

TEST(Sampling, SeedsArePerSampleAndReproducible) {
    NumericConfig a, b;
    b.rng_seed = a.rng_seed + 1;
    ComplexPoint p = sample_point(a, 7), q = sample_point(a, 7), r = sample_point(b, 7);
    EXPECT_EQ(p.tau, q.tau);
    EXPECT_EQ(p.z, q.z);
    EXPECT_NE(p.tau, r.tau);
    for (int i = 0; i < 200; ++i) {
        cplx tau = sample_point(a, static_cast<std::uint64_t>(i)).tau;
        EXPECT_GE(tau.imag(), a.im_tau_min);
        EXPECT_LE(tau.imag(), a.im_tau_max);
    }
}

TEST(Suite, AllChecksPassWithDefaults) {
    for (const auto& e : numeric_suite()) {
        NumericCheck c = run_numeric(e.id);
        EXPECT_TRUE(c.passed) << c.id << " " << c.max_residual << " " << c.reason;
    }
    EXPECT_THROW(run_numeric("N99"), std::out_of_range);
}

TEST(Suite, TightToleranceFailsHonestly) {
    NumericCheck c = run_numeric("N6", 3, {}, 1e-30);
    EXPECT_FALSE(c.passed);
    EXPECT_EQ(c.tolerance, 1e-30);
}
