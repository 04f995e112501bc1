#pragma once

// Gromov-Witten input data for the plane blown up at nine points, along the
// classes beta_n = S + nF (S a section, F = -K the fiber class):
//
//   sum_n N^0(beta_n) q^n = P_12
//   sum_n N^1(beta_n) q^n = P_12 * DG
//   N^1(lF)               = sigma(l) / l
//
// These are input data; nothing here re-derives them from geometry.

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "qbps/qforms.hpp"
#include "qbps/series.hpp"

namespace qbps {

/// A class aS + bF in the span of the section and fiber classes.
struct surface_class {
    long long s = 0;
    long long f = 0;

    friend surface_class operator+(surface_class x, surface_class y) { return {x.s + y.s, x.f + y.f}; }
    friend bool operator==(surface_class, surface_class) = default;
};

struct SurfaceContext {
    long long euler_characteristic = 12;
    long long s_self_intersection = -1;
    long long f_self_intersection = 0;
    long long s_dot_f = 1;

    long long dot(surface_class x, surface_class y) const
    {
        return x.s * y.s * s_self_intersection + (x.s * y.f + x.f * y.s) * s_dot_f +
               x.f * y.f * f_self_intersection;
    }

    /// K = -F.
    static constexpr surface_class canonical() { return {0, -1}; }

    static constexpr surface_class beta(long long n) { return {1, n}; }

    /// c(beta) = -beta.K
    long long degree(surface_class b) const { return -dot(b, canonical()); }

    /// g(beta) from 2g - 2 = beta.(K + beta).
    long long genus(surface_class b) const
    {
        const long long twice = dot(b, canonical() + b) + 2;
        if (twice % 2 != 0)
            throw std::domain_error("adjunction gives an odd 2g");
        return twice / 2;
    }
};

struct GWTable {
    TruncatedSeries n0;
    TruncatedSeries n1;

    std::size_t order() const { return n0.order(); }
};

inline TruncatedSeries n0_series(std::size_t order) { return p_alpha(12, order); }

inline TruncatedSeries n1_series(std::size_t order)
{
    return p_alpha(12, order) * D(g_series(order));
}

inline GWTable make_gw_table(const qform_catalog& catalog)
{
    auto p12 = catalog.p_alpha(12);
    auto n1 = p12 * D(catalog.G());
    return GWTable{std::move(p12), std::move(n1)};
}

inline GWTable make_gw_table(std::size_t order) { return make_gw_table(qform_catalog(order)); }

/// N^1(lF) = sigma(l)/l, not an integer in general.
inline Rational n1_fiber(std::uint64_t l)
{
    if (l == 0)
        throw std::domain_error("N^1(lF) needs l >= 1");
    Rational r(static_cast<unsigned long>(sigma(l)), static_cast<unsigned long>(l));
    r.canonicalize();
    return r;
}

/// N^0 of a class in the span of S and F: the zero class gives 0, beta_n is
/// read from the table. Other classes are outside the tabulated data.
inline Rational n0_of(const GWTable& table, surface_class b)
{
    if (b == surface_class{})
        return 0;
    if (b.s == 1 && b.f >= 0)
        return table.n0.coeff(static_cast<std::size_t>(b.f));
    throw std::domain_error("N^0 is not tabulated for this class");
}

/// N^1 of a class: 0 for the zero class, sigma(l)/l for lF, the table for beta_n.
inline Rational n1_of(const GWTable& table, surface_class b)
{
    if (b == surface_class{})
        return 0;
    if (b.s == 0 && b.f > 0)
        return n1_fiber(static_cast<std::uint64_t>(b.f));
    if (b.s == 1 && b.f >= 0)
        return table.n1.coeff(static_cast<std::size_t>(b.f));
    throw std::domain_error("N^1 is not tabulated for this class");
}

} // namespace qbps
