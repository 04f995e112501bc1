#pragma once

// The genus-one and genus-two numbers a(beta), b(beta) built from genus 0 and
// genus 1 Gromov-Witten invariants of a surface, together with their
// generating functions A(q), B(q) along beta_n = S + nF.
//
// Three independent routes to B are provided:
//   * b_direct_series     - the specialized coefficient formula, literally
//   * b_derivation_series - the intermediate series expression in D, P_12, G
//   * b_closed_series     - (1/10) P_12 (7G^2 - G + DG)
// and two to A (direct coefficient formula and -P_12 G).

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qbps/gw.hpp"
#include "qbps/qforms.hpp"
#include "qbps/series.hpp"

namespace qbps {

struct ClassData {
    long long c = 1; ///< c(beta) = -beta.K, must be positive
    long long g = 0; ///< genus from 2g - 2 = beta.(K + beta)
    Rational n0;     ///< N^0(beta)
    Rational n1;     ///< N^1(beta)
};

/// One summand beta = beta' + beta'' of the decomposition sum in b(beta).
struct DecompositionTerm {
    long long c_prime = 0;           ///< c(beta')
    long long dot_prime_dprime = 0;  ///< beta'.beta''
    long long dot_dprime_dprime = 0; ///< beta''.beta''
    Rational n1_prime;               ///< N^1(beta')
    Rational n0_dprime;              ///< N^0(beta'')
};

struct BPSTable {
    TruncatedSeries a_series;
    TruncatedSeries b_series;

    std::size_t order() const { return a_series.order(); }
};

/// binom(a, b), zero outside 0 <= b <= a.
inline Integer binom(long long a, long long b)
{
    if (b < 0 || a < 0 || b > a)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

namespace detail {
inline void require_positive_degree(const ClassData& data)
{
    if (data.c <= 0)
        throw std::domain_error("c(beta) must be positive");
}
} // namespace detail

/// a(beta) = -(1/12) g N^0(beta)
inline Rational a_general(const ClassData& data)
{
    detail::require_positive_degree(data);
    return Rational(static_cast<long>(-data.g)) * data.n0 / 12;
}

/// b(beta) = (1/2880)(12g^2 + gc - 24g) N^0 + (1/240) chi N^1
///           + (1/240) sum binom(c-1, c') (b'.b'')(b''.b'') N^1(b') N^0(b'')
inline Rational b_general(const ClassData& data, long long chi,
                          const std::vector<DecompositionTerm>& terms)
{
    detail::require_positive_degree(data);
    const Integer g(static_cast<long>(data.g));
    const Integer c(static_cast<long>(data.c));
    Rational result = Rational(12 * g * g + g * c - 24 * g) * data.n0 / 2880;
    result += Rational(static_cast<long>(chi)) * data.n1 / 240;
    Rational sum = 0;
    for (const auto& t : terms) {
        const Integer w = binom(data.c - 1, t.c_prime) * static_cast<long>(t.dot_prime_dprime) *
                          static_cast<long>(t.dot_dprime_dprime);
        sum += Rational(w) * t.n1_prime * t.n0_dprime;
    }
    result += sum / 240;
    result.canonicalize();
    return result;
}

/// Decompositions beta_n = (n-k)F + (S + kF), k = 0..n-1. Terms with a
/// vanishing invariant are kept.
inline std::vector<DecompositionTerm> decompositions_for(std::size_t n, const GWTable& table,
                                                         const SurfaceContext& ctx = {})
{
    std::vector<DecompositionTerm> terms;
    const auto nn = static_cast<long long>(n);
    for (long long k = 0; k < nn; ++k) {
        const surface_class prime{0, nn - k};
        const surface_class dprime = SurfaceContext::beta(k);
        terms.push_back({ctx.degree(prime), ctx.dot(prime, dprime), ctx.dot(dprime, dprime),
                         n1_of(table, prime), n0_of(table, dprime)});
    }
    return terms;
}

/// ClassData for beta_n read off the table and the surface context.
inline ClassData class_data_for(std::size_t n, const GWTable& table, const SurfaceContext& ctx = {})
{
    const auto b = SurfaceContext::beta(static_cast<long long>(n));
    return {ctx.degree(b), ctx.genus(b), n0_of(table, b), n1_of(table, b)};
}

/// a(beta_n) = -(1/12) n N^0(beta_n), coefficient by coefficient.
inline TruncatedSeries a_direct_series(const GWTable& table)
{
    TruncatedSeries a(table.order());
    for (std::size_t n = 0; n <= table.order(); ++n)
        a[n] = Rational(-static_cast<long>(n)) * table.n0[n] / 12;
    return a;
}

/// b(beta_n) from the specialized formula
///   (1/2880)(12n^2 - 23n) N^0(beta_n) + (1/20) N^1(beta_n)
///   + (1/240) sum_{k<n} (n-k)(2k-1) N^1((n-k)F) N^0(beta_k)
inline TruncatedSeries b_direct_series(const GWTable& table)
{
    TruncatedSeries b(table.order());
    for (std::size_t n = 0; n <= table.order(); ++n) {
        const auto nn = static_cast<long>(n);
        Rational value = Rational(12 * nn * nn - 23 * nn) * table.n0[n] / 2880;
        value += table.n1[n] / 20;
        Rational sum = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const auto kk = static_cast<long>(k);
            sum += Rational((nn - kk) * (2 * kk - 1)) * n1_fiber(n - k) * table.n0[k];
        }
        value += sum / 240;
        b[n] = value;
    }
    return b;
}

/// A = -P_12 G
inline TruncatedSeries a_closed_series(const qform_catalog& catalog)
{
    return -(catalog.p_alpha(12) * catalog.G());
}

/// 7G^2 - G + DG over any coefficient ring.
template <CoefficientRing Ring>
series<Ring> brace_series(const series<Ring>& g)
{
    return g.ring().from_int(7) * (g * g) - g + D(g);
}

/// B = (1/10) P_12 (7G^2 - G + DG)
inline TruncatedSeries b_closed_series(const qform_catalog& catalog)
{
    return Rational(1, 10) * (catalog.p_alpha(12) * brace_series(catalog.G()));
}

/// B = (1/240) D^2 P_12 - (23/2880) D P_12 + (1/20) P_12 DG + (1/240) G (2 D P_12 - P_12)
inline TruncatedSeries b_derivation_series(const qform_catalog& catalog)
{
    const auto p12 = catalog.p_alpha(12);
    const auto& g = catalog.G();
    const auto dp12 = D(p12);
    return Rational(1, 240) * D(dp12) - Rational(23, 2880) * dp12 + Rational(1, 20) * (p12 * D(g)) +
           Rational(1, 240) * (g * (Rational(2) * dp12 - p12));
}

inline TruncatedSeries a_closed_series(std::size_t order) { return a_closed_series(qform_catalog(order)); }
inline TruncatedSeries b_closed_series(std::size_t order) { return b_closed_series(qform_catalog(order)); }
inline TruncatedSeries a_direct_series(std::size_t order) { return a_direct_series(make_gw_table(order)); }
inline TruncatedSeries b_direct_series(std::size_t order) { return b_direct_series(make_gw_table(order)); }

inline BPSTable make_bps_table(const qform_catalog& catalog)
{
    return {a_closed_series(catalog), b_closed_series(catalog)};
}

/// Indices k whose coefficient is not an integer.
inline std::vector<std::size_t> integrality_audit(const TruncatedSeries& f)
{
    std::vector<std::size_t> bad;
    for (std::size_t k = 0; k <= f.order(); ++k)
        if (!is_integer(f[k]))
            bad.push_back(k);
    return bad;
}

} // namespace qbps
