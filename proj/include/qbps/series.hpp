#pragma once

// Formal power series in q truncated at a fixed order N.
//
// A series of order N stores the coefficients of q^0 .. q^N; everything of
// degree > N is unknown and dropped. Binary operations on series of different
// orders truncate to the smaller order.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbps/errors.hpp"
#include "qbps/rational.hpp"
#include "qbps/ring.hpp"

namespace qbps {

template <CoefficientRing Ring>
class series {
public:
    using ring_type = Ring;
    using value_type = typename Ring::value_type;

    /// Zero series of the given order.
    explicit series(std::size_t order, Ring ring = Ring{})
        : ring_(std::move(ring)), coeffs_(order + 1, ring_.zero())
    {
    }

    /// coeffs.size() must equal order + 1.
    series(std::vector<value_type> coeffs, std::size_t order, Ring ring = Ring{})
        : ring_(std::move(ring)), coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() != order + 1)
            throw construction_error("series of order " + std::to_string(order) + " needs " +
                                     std::to_string(order + 1) + " coefficients, got " +
                                     std::to_string(coeffs_.size()));
    }

    static series constant(const value_type& c, std::size_t order, Ring ring = Ring{})
    {
        series s(order, std::move(ring));
        s.coeffs_[0] = c;
        return s;
    }

    static series one(std::size_t order, Ring ring = Ring{})
    {
        series s(order, ring);
        s.coeffs_[0] = ring.one();
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const Ring& ring() const { return ring_; }
    const std::vector<value_type>& coefficients() const { return coeffs_; }

    /// Coefficient of q^k; k beyond the order is an error.
    const value_type& coeff(std::size_t k) const
    {
        if (k > order())
            throw std::out_of_range("coefficient q^" + std::to_string(k) +
                                    " lies beyond truncation order " + std::to_string(order()));
        return coeffs_[k];
    }

    const value_type& operator[](std::size_t k) const { return coeffs_[k]; }
    value_type& operator[](std::size_t k) { return coeffs_[k]; }

    series truncate(std::size_t order) const
    {
        const std::size_t n = std::min(order, this->order());
        return series(std::vector<value_type>(coeffs_.begin(), coeffs_.begin() + n + 1), n, ring_);
    }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [this](const value_type& c) { return ring_.is_zero(c); });
    }

    /// Equality up to the smaller of the two orders.
    friend bool operator==(const series& f, const series& g)
    {
        require_same_ring(f, g);
        const std::size_t n = std::min(f.order(), g.order());
        for (std::size_t k = 0; k <= n; ++k)
            if (!(f.coeffs_[k] == g.coeffs_[k]))
                return false;
        return true;
    }

    friend series operator+(const series& f, const series& g)
    {
        require_same_ring(f, g);
        const std::size_t n = std::min(f.order(), g.order());
        series r(n, f.ring_);
        for (std::size_t k = 0; k <= n; ++k)
            r.coeffs_[k] = f.ring_.add(f.coeffs_[k], g.coeffs_[k]);
        return r;
    }

    friend series operator-(const series& f, const series& g)
    {
        require_same_ring(f, g);
        const std::size_t n = std::min(f.order(), g.order());
        series r(n, f.ring_);
        for (std::size_t k = 0; k <= n; ++k)
            r.coeffs_[k] = f.ring_.sub(f.coeffs_[k], g.coeffs_[k]);
        return r;
    }

    friend series operator-(const series& f)
    {
        series r(f.order(), f.ring_);
        for (std::size_t k = 0; k <= f.order(); ++k)
            r.coeffs_[k] = f.ring_.neg(f.coeffs_[k]);
        return r;
    }

    /// Cauchy product.
    friend series operator*(const series& f, const series& g)
    {
        require_same_ring(f, g);
        const Ring& ring = f.ring_;
        const std::size_t n = std::min(f.order(), g.order());
        series r(n, ring);
        for (std::size_t i = 0; i <= n; ++i) {
            if (ring.is_zero(f.coeffs_[i]))
                continue;
            for (std::size_t j = 0; i + j <= n; ++j)
                ring.fma(r.coeffs_[i + j], f.coeffs_[i], g.coeffs_[j]);
        }
        return r;
    }

    friend series operator*(const value_type& c, const series& f)
    {
        series r(f.order(), f.ring_);
        for (std::size_t k = 0; k <= f.order(); ++k)
            r.coeffs_[k] = f.ring_.mul(c, f.coeffs_[k]);
        return r;
    }

    series& operator+=(const series& g) { return *this = *this + g; }
    series& operator-=(const series& g) { return *this = *this - g; }
    series& operator*=(const series& g) { return *this = *this * g; }

private:
    static void require_same_ring(const series& f, const series& g)
    {
        if (!(f.ring_ == g.ring_))
            throw modulus_mismatch("series over different coefficient rings");
    }

    Ring ring_;
    std::vector<value_type> coeffs_;
};

using TruncatedSeries = series<rational_ring>;
using ResidueSeries = series<residue_ring>;

inline TruncatedSeries make_series(std::vector<Rational> coeffs, std::size_t order)
{
    return TruncatedSeries(std::move(coeffs), order);
}

/// Convenience for integer coefficient lists, e.g. from_ints({1, -1}, 1) = 1 - q.
template <CoefficientRing Ring = rational_ring>
series<Ring> from_ints(const std::vector<long long>& coeffs, std::size_t order, Ring ring = Ring{})
{
    std::vector<typename Ring::value_type> v;
    v.reserve(coeffs.size());
    for (long long c : coeffs)
        v.push_back(ring.from_int(c));
    return series<Ring>(std::move(v), order, ring);
}

template <CoefficientRing Ring>
series<Ring> add(const series<Ring>& f, const series<Ring>& g)
{
    return f + g;
}

template <CoefficientRing Ring>
series<Ring> mul(const series<Ring>& f, const series<Ring>& g)
{
    return f * g;
}

template <CoefficientRing Ring>
const typename Ring::value_type& coeff(const series<Ring>& f, std::size_t k)
{
    return f.coeff(k);
}

/// Multiplicative inverse; the constant term must be a unit of the ring.
template <CoefficientRing Ring>
series<Ring> invert(const series<Ring>& f)
{
    const Ring& ring = f.ring();
    if (!ring.is_unit(f[0]))
        throw not_invertible("constant term " + ring.str(f[0]) + " is not a unit");
    const std::size_t n = f.order();
    const auto c0_inv = ring.inverse(f[0]);
    series<Ring> g(n, ring);
    g[0] = c0_inv;
    for (std::size_t k = 1; k <= n; ++k) {
        auto acc = ring.zero();
        for (std::size_t i = 1; i <= k; ++i)
            ring.fma(acc, f[i], g[k - i]);
        g[k] = ring.neg(ring.mul(c0_inv, acc));
    }
    return g;
}

/// f^alpha by binary powering; alpha < 0 powers the inverse.
template <CoefficientRing Ring>
series<Ring> pow_int(const series<Ring>& f, long long alpha)
{
    series<Ring> base = alpha < 0 ? invert(f) : f;
    unsigned long long e = alpha < 0 ? 0ULL - static_cast<unsigned long long>(alpha)
                                     : static_cast<unsigned long long>(alpha);
    auto result = series<Ring>::one(f.order(), f.ring());
    while (e != 0) {
        if (e & 1ULL)
            result = result * base;
        e >>= 1;
        if (e != 0)
            base = base * base;
    }
    return result;
}

/// The Euler operator D = q d/dq: coefficient k becomes k * f_k.
template <CoefficientRing Ring>
series<Ring> D(const series<Ring>& f)
{
    const Ring& ring = f.ring();
    series<Ring> r(f.order(), ring);
    for (std::size_t k = 1; k <= f.order(); ++k)
        r[k] = ring.mul(ring.from_int(static_cast<long long>(k)), f[k]);
    return r;
}

/// Image of an exact series in Z/m. Every denominator must be a unit mod m.
inline ResidueSeries reduce_mod(const TruncatedSeries& f, std::uint64_t modulus)
{
    const residue_ring ring(modulus);
    ResidueSeries r(f.order(), ring);
    for (std::size_t k = 0; k <= f.order(); ++k)
        r[k] = ring.from_rational(f[k]);
    return r;
}

/// Reduces a residue series further, m' must divide m.
inline ResidueSeries reduce_mod(const ResidueSeries& f, std::uint64_t modulus)
{
    if (f.ring().modulus() % modulus != 0)
        throw reduction_undefined(std::to_string(modulus) + " does not divide " +
                                  std::to_string(f.ring().modulus()));
    const residue_ring ring(modulus);
    ResidueSeries r(f.order(), ring);
    for (std::size_t k = 0; k <= f.order(); ++k)
        r[k] = f[k] % modulus;
    return r;
}

/// Indices whose coefficient is nonzero, in increasing order.
template <CoefficientRing Ring>
std::vector<std::size_t> nonzero_indices(const series<Ring>& f)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k <= f.order(); ++k)
        if (!f.ring().is_zero(f[k]))
            out.push_back(k);
    return out;
}

} // namespace qbps
