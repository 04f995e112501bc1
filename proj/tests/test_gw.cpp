#include <gtest/gtest.h>

#include "qbps/gw.hpp"

using namespace qbps;

TEST(GW, N0Series)
{
    const auto n0 = n0_series(10);
    EXPECT_EQ(n0.coeff(0), 1);
    EXPECT_EQ(n0.coeff(1), 12);
    EXPECT_EQ(n0.coeff(2), 90);
}

TEST(GW, N1Series)
{
    const auto n1 = n1_series(10);
    EXPECT_EQ(n1.coeff(0), 0);
    EXPECT_EQ(n1.coeff(1), 1);
    EXPECT_EQ(n1.coeff(2), 18);
}

TEST(GW, N1Fiber)
{
    EXPECT_EQ(n1_fiber(1), 1);
    EXPECT_EQ(n1_fiber(2), Rational(3, 2));
    EXPECT_EQ(n1_fiber(4), Rational(7, 4));
    EXPECT_EQ(n1_fiber(6), 2);
    EXPECT_THROW(n1_fiber(0), std::domain_error);
}

TEST(GW, TableCoefficientsAreNonNegativeIntegers)
{
    const auto table = make_gw_table(150);
    EXPECT_EQ(table.order(), 150u);
    EXPECT_EQ(table.n1.coeff(0), 0);
    for (std::size_t k = 0; k <= 150; ++k) {
        EXPECT_TRUE(is_integer(table.n0[k]));
        EXPECT_TRUE(is_integer(table.n1[k]));
        EXPECT_GE(sgn(table.n0[k]), 0);
        EXPECT_GE(sgn(table.n1[k]), 0);
    }
}

TEST(GW, TableIsInternallyConsistent)
{
    const auto table = make_gw_table(120);
    EXPECT_EQ(table.n1, table.n0 * D(g_series(120)));
    EXPECT_EQ(table.n0, n0_series(120));
    EXPECT_EQ(table.n1, n1_series(120));
}

TEST(SurfaceContext, DegreeAndGenusOfBetaN)
{
    const SurfaceContext ctx;
    EXPECT_EQ(ctx.euler_characteristic, 12);
    for (long long n = 0; n <= 50; ++n) {
        const auto b = SurfaceContext::beta(n);
        EXPECT_EQ(ctx.dot(b, SurfaceContext::canonical() + b), 2 * n - 2);
        EXPECT_EQ(ctx.degree(b), 1);
        EXPECT_EQ(ctx.genus(b), n);
    }
}

TEST(SurfaceContext, FiberClasses)
{
    const SurfaceContext ctx;
    const surface_class f{0, 1};
    EXPECT_EQ(ctx.dot(f, f), 0);
    EXPECT_EQ(ctx.degree(f), 0);
    EXPECT_EQ(ctx.genus(f), 1);
    EXPECT_EQ(ctx.dot({0, 3}, SurfaceContext::beta(2)), 3);
}

TEST(GW, ZeroClassConvention)
{
    const auto table = make_gw_table(5);
    EXPECT_EQ(n0_of(table, {}), 0);
    EXPECT_EQ(n1_of(table, {}), 0);
    EXPECT_EQ(n0_of(table, SurfaceContext::beta(2)), 90);
    EXPECT_EQ(n1_of(table, {0, 4}), Rational(7, 4));
    EXPECT_THROW(n0_of(table, {0, 2}), std::domain_error);
    EXPECT_THROW(n1_of(table, {2, 0}), std::domain_error);
    EXPECT_THROW(n0_of(table, SurfaceContext::beta(9)), std::out_of_range);
}
