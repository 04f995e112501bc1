#pragma once

// Test-only reference computations. None of this goes through the library's
// series arithmetic: partitions are enumerated, divisors are counted, and
// convolutions are plain loops over integer vectors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "qbps/series.hpp"

namespace qbps::oracle {

namespace detail {
// partitions of n into parts of size at most largest
inline std::uint64_t count_partitions(unsigned n, unsigned largest)
{
    if (n == 0)
        return 1;
    std::uint64_t total = 0;
    for (unsigned part = std::min(n, largest); part >= 1; --part)
        total += count_partitions(n - part, part);
    return total;
}
} // namespace detail

/// p(n) by enumerating every partition; fine for n <= 40.
inline std::uint64_t partitions_brute(unsigned n) { return detail::count_partitions(n, n); }

inline std::uint64_t divisor_sum_brute(std::uint64_t k)
{
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d <= k; ++d)
        if (k % d == 0)
            s += d;
    return s;
}

inline std::vector<mpz_class> convolve(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                       std::size_t order)
{
    std::vector<mpz_class> r(order + 1, 0);
    for (std::size_t k = 0; k <= order; ++k)
        for (std::size_t i = 0; i <= k; ++i)
            r[k] += a[i] * b[k - i];
    return r;
}

/// Coefficients of P^copies by repeated plain convolution of brute-force p(k).
inline std::vector<mpz_class> colored_partitions(unsigned copies, std::size_t order)
{
    std::vector<mpz_class> p(order + 1);
    for (std::size_t k = 0; k <= order; ++k)
        p[k] = static_cast<unsigned long>(partitions_brute(static_cast<unsigned>(k)));
    std::vector<mpz_class> r(order + 1, 0);
    r[0] = 1;
    for (unsigned c = 0; c < copies; ++c)
        r = convolve(r, p, order);
    return r;
}

/// Random series of a fixed order with coefficients p/q, |p| <= 9, 1 <= q <= 4.
inline TruncatedSeries random_series_of_order(std::mt19937_64& rng, std::size_t order,
                                              bool unit_constant = false)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    TruncatedSeries f(order);
    for (std::size_t k = 0; k <= order; ++k) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        f[k] = c;
    }
    while (unit_constant && sgn(f[0]) == 0) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        f[0] = c;
    }
    return f;
}

/// Random series with small rational coefficients; order in [0, max_order].
inline TruncatedSeries random_series(std::mt19937_64& rng, std::size_t max_order,
                                     bool unit_constant = false)
{
    std::uniform_int_distribution<std::size_t> order_dist(0, max_order);
    return random_series_of_order(rng, order_dist(rng), unit_constant);
}

} // namespace qbps::oracle
