#include <gtest/gtest.h>

#include "qbps/qforms.hpp"
#include "qbps/series.hpp"

using namespace qbps;

namespace {
TruncatedSeries ints(std::vector<long long> c, std::size_t order) { return from_ints(c, order); }
} // namespace

TEST(Series, MakeSeries)
{
    const auto one = make_series({Rational(1)}, 0);
    EXPECT_EQ(one.order(), 0u);
    EXPECT_EQ(one.coeff(0), 1);

    const auto q = make_series({Rational(0), Rational(1)}, 1);
    EXPECT_EQ(q.coeff(0), 0);
    EXPECT_EQ(q.coeff(1), 1);

    EXPECT_THROW(make_series({Rational(1), Rational(1)}, 0), construction_error);
}

TEST(Series, Add)
{
    EXPECT_EQ(ints({1, 1}, 1) + ints({1, -1}, 1), ints({2, 0}, 1));
    const auto g = g_series(10);
    EXPECT_EQ(g + TruncatedSeries(10), g);
    EXPECT_TRUE((g + (-g)).is_zero());
}

TEST(Series, MixedOrderTruncatesToMinimum)
{
    const auto f = ints({1, 2, 3, 4}, 3);
    const auto g = ints({1, 1}, 1);
    EXPECT_EQ((f + g).order(), 1u);
    EXPECT_EQ((f * g).order(), 1u);
    EXPECT_EQ(f * g, ints({1, 3}, 1));
}

TEST(Series, Mul)
{
    EXPECT_EQ(ints({1, 1, 0}, 2) * ints({1, -1, 0}, 2), ints({1, 0, -1}, 2));
    const auto f = ints({3, -1, 4, 1, -5}, 4);
    EXPECT_EQ(f * TruncatedSeries::one(4), f);
    // G starts at q, so [q^2] G^2 = sigma(1)^2
    const auto g = g_series(5);
    EXPECT_EQ((g * g).coeff(2), 1);
}

TEST(Series, Invert)
{
    EXPECT_EQ(invert(ints({1, -1, 0, 0}, 3)), ints({1, 1, 1, 1}, 3));
    EXPECT_EQ(invert(ints({1}, 0)), ints({1}, 0));
    const auto p = partition_series(50);
    EXPECT_EQ(p * invert(p), TruncatedSeries::one(50));
    EXPECT_THROW(invert(ints({0, 1}, 1)), not_invertible);
}

TEST(Series, InvertRationalConstant)
{
    // 1/(2 - q) = 1/2 + q/4 + q^2/8
    const auto inv = invert(ints({2, -1, 0}, 2));
    EXPECT_EQ(inv.coeff(0), Rational(1, 2));
    EXPECT_EQ(inv.coeff(1), Rational(1, 4));
    EXPECT_EQ(inv.coeff(2), Rational(1, 8));
}

TEST(Series, PowInt)
{
    const auto f = ints({2, 3, 5}, 2);
    EXPECT_EQ(pow_int(f, 0), TruncatedSeries::one(2));
    EXPECT_EQ(pow_int(ints({1, -1, 0}, 2), -1), ints({1, 1, 1}, 2));
    EXPECT_EQ(pow_int(partition_series(2), 12).coeff(2), 90);
    EXPECT_THROW(pow_int(ints({0, 1}, 1), -2), not_invertible);
    EXPECT_EQ(pow_int(ints({0, 1, 0, 0}, 3), 3), ints({0, 0, 0, 1}, 3));
}

TEST(Series, EulerOperator)
{
    EXPECT_TRUE(D(ints({7}, 0)).is_zero());
    EXPECT_EQ(D(ints({0, 0, 0, 1}, 3)), ints({0, 0, 0, 3}, 3));
    const auto dg = D(g_series(6));
    EXPECT_EQ(dg.coeff(4), 28);
    for (std::size_t k = 1; k <= 6; ++k)
        EXPECT_EQ(dg.coeff(k), Rational(static_cast<long>(k * sigma(k))));
}

TEST(Series, ReduceMod)
{
    const auto f = ints({0, 0, 10}, 2);
    EXPECT_EQ(reduce_mod(f, 10)[2], 0u);

    const auto half = make_series({Rational(1, 2)}, 0);
    EXPECT_EQ(reduce_mod(half, 5)[0], 3u);
    EXPECT_THROW(reduce_mod(half, 2), reduction_undefined);

    // negative numerators land in [0, m)
    EXPECT_EQ(reduce_mod(ints({-1}, 0), 7)[0], 6u);
    EXPECT_EQ(reduce_mod(make_series({Rational(-1, 3)}, 0), 7)[0], 2u); // 3 * 2 = 6 = -1
    EXPECT_THROW(reduce_mod(f, 1), std::invalid_argument);
}

TEST(Series, ReduceResidueFurther)
{
    const auto f = reduce_mod(ints({0, 7, 3, 9}, 3), 10);
    EXPECT_EQ(reduce_mod(f, 5), reduce_mod(ints({0, 7, 3, 9}, 3), 5));
    EXPECT_THROW(reduce_mod(f, 3), reduction_undefined);
}

TEST(Series, ResidueArithmeticStaysInRange)
{
    const residue_ring z7(7);
    const auto f = from_ints({3, 6, 5}, 2, z7);
    const auto g = from_ints({-1, 4, 13}, 2, z7);
    const auto product = f * g;
    for (auto c : product.coefficients())
        EXPECT_LT(c, 7u);
    EXPECT_EQ(product, from_ints({4, 6, 2}, 2, z7)); // (3 + 6q + 5q^2)(6 + 4q + 6q^2)
    EXPECT_EQ(f * invert(f), ResidueSeries::one(2, z7));
    EXPECT_THROW(invert(from_ints({0, 1}, 1, z7)), not_invertible);
    EXPECT_THROW(invert(from_ints({2, 1}, 1, residue_ring(4))), not_invertible);
}

TEST(Series, ResidueModuliMustMatch)
{
    const auto f = from_ints({1, 1}, 1, residue_ring(5));
    const auto g = from_ints({1, 1}, 1, residue_ring(7));
    EXPECT_THROW(f + g, modulus_mismatch);
    EXPECT_THROW(f * g, modulus_mismatch);
}

TEST(Series, Coeff)
{
    EXPECT_EQ(coeff(ints({1, 2}, 1), 1), 2);
    const auto g = g_series(50);
    EXPECT_EQ(coeff(g, 6), 12);
    EXPECT_THROW(coeff(g, 100), std::out_of_range);
}

TEST(Series, EqualityUpToMinimumOrder)
{
    EXPECT_EQ(ints({1, 2, 3}, 2), ints({1, 2}, 1));
    EXPECT_NE(ints({1, 2, 3}, 2), ints({1, 5}, 1));
}

TEST(Series, Truncate)
{
    const auto f = ints({1, 2, 3, 4}, 3);
    EXPECT_EQ(f.truncate(1).order(), 1u);
    EXPECT_EQ(f.truncate(9).order(), 3u);
}
