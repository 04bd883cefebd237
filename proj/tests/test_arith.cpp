#include "oracles.hpp"

#include <qfive/arith.hpp>

#include <gtest/gtest.h>

using namespace qfive;

TEST(Legendre5, Values) {
    EXPECT_EQ(legendre5(1), 1);
    EXPECT_EQ(legendre5(7), -1);
    EXPECT_EQ(legendre5(10), 0);
    EXPECT_EQ(legendre5(4), 1);
    EXPECT_EQ(legendre5(3), -1);
}

TEST(Legendre5, CompletelyMultiplicativeOnUnits) {
    for (std::int64_t a = 1; a < 60; ++a)
        for (std::int64_t b = 1; b < 60; ++b)
            if ((a * b) % 5 != 0) {
                EXPECT_EQ(legendre5(a * b), legendre5(a) * legendre5(b));
            }
}

TEST(DivisorSum, Examples) {
    EXPECT_EQ(divisor_sum(DivisorKernel::A, 2), BigRat(-1));
    EXPECT_EQ(divisor_sum(DivisorKernel::B, 4), BigRat(3));
    EXPECT_EQ(divisor_sum(DivisorKernel::S, 1), BigRat(1));
    EXPECT_EQ(divisor_sum(DivisorKernel::S, 5), BigRat(1));
    EXPECT_EQ(divisor_sum(DivisorKernel::C, 10), BigRat(1 + 2));
    EXPECT_THROW(divisor_sum(DivisorKernel::A, 0), std::domain_error);
}

TEST(DivisorSum, MatchesNaiveScan) {
    for (std::int64_t n = 1; n <= 300; ++n) {
        EXPECT_EQ(divisor_sum(DivisorKernel::A, n), BigRat(oracle::sum_A(n))) << n;
        EXPECT_EQ(divisor_sum(DivisorKernel::B, n), BigRat(oracle::sum_B(n))) << n;
        std::int64_t s = oracle::sigma(n) - (n % 5 == 0 ? 5 * oracle::sigma(n / 5) : 0);
        EXPECT_EQ(divisor_sum(DivisorKernel::S, n), BigRat(s)) << n;
    }
}

TEST(DivisorSum, KernelCrossRelations) {
    for (std::int64_t n = 1; n <= 200; ++n) {
        BigRat a = divisor_sum(DivisorKernel::A, n), b = divisor_sum(DivisorKernel::B, n);
        EXPECT_EQ(divisor_sum(DivisorKernel::D25, n), 25 * b - 11 * a);
        EXPECT_EQ(divisor_sum(DivisorKernel::E11, n), 11 * b - 5 * a);
    }
}

TEST(DivisorSum, EtaQuotientCoefficients) {
    const long first[] = {-5, 5, 10, -15, -5};
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(-5 * divisor_sum(DivisorKernel::A, n), BigRat(first[n - 1]));
    const long second[] = {1, 1, 2, 3, 5};
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(divisor_sum(DivisorKernel::B, n), BigRat(second[n - 1]));
}

TEST(KernelNames, RoundTrip) {
    for (auto k : kAllKernels) EXPECT_EQ(parse_kernel(kernel_name(k)), k);
    EXPECT_FALSE(parse_kernel("Q").has_value());
}

TEST(Partitions, SpotValues) {
    EXPECT_EQ(partition_p(0), 1);
    EXPECT_EQ(partition_p(4), 5);
    EXPECT_EQ(partition_p(9), 30);
    EXPECT_EQ(partition_p(14), 135);
    EXPECT_EQ(partition_p(100), BigInt("190569292"));
    EXPECT_THROW(partition_p(-1), std::domain_error);
}

TEST(Partitions, MatchCoinChangeCount) {
    auto ways = oracle::partitions_upto(300);
    for (int n = 0; n <= 300; n += 7) {
        BigInt p = partition_p(n);
        if (p.fits_slong_p()) {
            EXPECT_EQ(p.get_si(), ways[static_cast<std::size_t>(n)]) << n;
        }
    }
}

TEST(Partitions, RamanujanCongruence) {
    for (std::int64_t n = 0; n <= 40; ++n) EXPECT_EQ(BigInt(partition_p(5 * n + 4) % 5), 0) << n;
}
