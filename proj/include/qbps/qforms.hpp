#pragma once

// The named arithmetic series: divisor sums, partition counts, and the
// generating functions
//
//   G(q)   = sum_{k>=1} sigma(k) q^k
//   P(q)   = prod_{m>=1} (1 - q^m)^{-1} = sum_{k>=0} p(k) q^k
//   P_a(q) = P(q)^a
//
// P carries the constant term p(0) = 1 of the product form; G has G_0 = 0.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "qbps/series.hpp"

namespace qbps {

/// Sum of the positive divisors of k, by trial division up to sqrt(k).
inline std::uint64_t sigma(std::uint64_t k)
{
    if (k == 0)
        throw std::domain_error("sigma(0) is undefined");
    std::uint64_t total = 0;
    for (std::uint64_t d = 1; d * d <= k; ++d) {
        if (k % d != 0)
            continue;
        total += d;
        if (d != k / d)
            total += k / d;
    }
    return total;
}

/// P = prod_{m=1..N} (1 - q^m)^{-1}, truncated at N.
template <CoefficientRing Ring = rational_ring>
series<Ring> partition_series(std::size_t order, Ring ring = Ring{})
{
    series<Ring> p(order, ring);
    p[0] = ring.one();
    // multiplying by 1/(1 - q^m) is the running sum c_k += c_{k-m}
    for (std::size_t m = 1; m <= order; ++m)
        for (std::size_t k = m; k <= order; ++k)
            p[k] = ring.add(p[k], p[k - m]);
    return p;
}

template <CoefficientRing Ring = rational_ring>
series<Ring> p_alpha(long long alpha, std::size_t order, Ring ring = Ring{})
{
    return pow_int(partition_series(order, ring), alpha);
}

template <CoefficientRing Ring = rational_ring>
series<Ring> g_series(std::size_t order, Ring ring = Ring{})
{
    series<Ring> g(order, ring);
    for (std::size_t k = 1; k <= order; ++k)
        g[k] = ring.from_int(static_cast<long long>(sigma(k)));
    return g;
}

/// P, G and selected powers P_a, all at one truncation order.
///
/// Built eagerly; read-only afterwards, so a catalog can be shared across
/// threads.
template <CoefficientRing Ring = rational_ring>
class basic_qform_catalog {
public:
    explicit basic_qform_catalog(std::size_t order, const std::vector<long long>& alphas = {12},
                                 Ring ring = Ring{})
        : order_(order), p_(partition_series(order, ring)), g_(g_series(order, ring))
    {
        for (long long a : alphas)
            if (!powers_.contains(a))
                powers_.emplace(a, pow_int(p_, a));
    }

    std::size_t order() const { return order_; }
    const Ring& ring() const { return p_.ring(); }
    const series<Ring>& P() const { return p_; }
    const series<Ring>& G() const { return g_; }

    bool has_power(long long alpha) const { return powers_.contains(alpha); }

    /// Cached P_alpha when available, otherwise computed on the spot.
    series<Ring> p_alpha(long long alpha) const
    {
        if (auto it = powers_.find(alpha); it != powers_.end())
            return it->second;
        return pow_int(p_, alpha);
    }

private:
    std::size_t order_;
    series<Ring> p_;
    series<Ring> g_;
    std::map<long long, series<Ring>> powers_;
};

using qform_catalog = basic_qform_catalog<rational_ring>;

} // namespace qbps
