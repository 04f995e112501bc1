#pragma once

// Machine checks of the congruence 7G^2 - G + DG = 0 (mod 10) and of each
// intermediate step of its proof, plus the exact series identities that
// connect the direct and closed forms of A and B.
//
// Residue checks never leave Z/m: G and P are reduced first and all products
// are taken mod m, which is valid because reduction is a ring morphism.
//
// Every check accepts an optional perturbation that adds delta to one
// coefficient of the series under test just before it is inspected. This
// is the mutation hook used to confirm that failures are reported at the
// right index. Perturbations beyond the truncation order are ignored.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qbps/conjecture.hpp"
#include "qbps/gw.hpp"
#include "qbps/qforms.hpp"
#include "qbps/series.hpp"

namespace qbps {

struct CheckFailure {
    std::size_t index = 0;
    std::string value; ///< offending residue, or the exact discrepancy

    friend bool operator==(const CheckFailure&, const CheckFailure&) = default;
};

struct CongruenceCheck {
    std::string name;
    std::uint64_t modulus = 0; ///< 0 for exact (non-modular) checks
    std::size_t order = 0;
    bool passed = true;
    std::optional<CheckFailure> first_failure;
};

struct Perturbation {
    std::size_t index = 0;
    Rational delta = 1;
};

using MaybePerturbation = std::optional<Perturbation>;

/// A perturbation aimed at one named check of run_all.
struct TargetedPerturbation {
    std::string check;
    Perturbation perturbation;
};

struct VerificationReport {
    std::vector<CongruenceCheck> checks;

    bool all_passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    }
};

namespace detail {

inline void apply(TruncatedSeries& f, const MaybePerturbation& p)
{
    if (p && p->index <= f.order())
        f[p->index] += p->delta;
}

inline void apply(ResidueSeries& f, const MaybePerturbation& p)
{
    if (p && p->index <= f.order())
        f[p->index] = f.ring().add(f[p->index], f.ring().from_rational(p->delta));
}

inline CongruenceCheck make_check(std::string name, std::uint64_t modulus, std::size_t order,
                                  std::optional<CheckFailure> failure)
{
    CongruenceCheck c;
    c.name = std::move(name);
    c.modulus = modulus;
    c.order = order;
    c.passed = !failure.has_value();
    c.first_failure = std::move(failure);
    return c;
}

} // namespace detail

/// Passes iff every coefficient of s vanishes in Z/m.
inline CongruenceCheck zero_check(std::string name, const ResidueSeries& s)
{
    std::optional<CheckFailure> failure;
    for (std::size_t k = 0; k <= s.order(); ++k)
        if (s[k] != 0) {
            failure = CheckFailure{k, std::to_string(s[k])};
            break;
        }
    return detail::make_check(std::move(name), s.ring().modulus(), s.order(), std::move(failure));
}

/// Passes iff lhs and rhs agree up to the smaller order; reports lhs - rhs.
inline CongruenceCheck equality_check(std::string name, const TruncatedSeries& lhs,
                                      const TruncatedSeries& rhs)
{
    const std::size_t n = std::min(lhs.order(), rhs.order());
    std::optional<CheckFailure> failure;
    for (std::size_t k = 0; k <= n; ++k)
        if (lhs[k] != rhs[k]) {
            failure = CheckFailure{k, to_string(Rational(lhs[k] - rhs[k]))};
            break;
        }
    return detail::make_check(std::move(name), 0, n, std::move(failure));
}

/// Passes iff every coefficient of f is an integer.
inline CongruenceCheck integrality_check(std::string name, const TruncatedSeries& f)
{
    std::optional<CheckFailure> failure;
    if (const auto bad = integrality_audit(f); !bad.empty())
        failure = CheckFailure{bad.front(), to_string(f[bad.front()])};
    return detail::make_check(std::move(name), 0, f.order(), std::move(failure));
}

/// 7G^2 - G + DG reduced mod m.
inline ResidueSeries brace_mod(std::size_t order, std::uint64_t modulus)
{
    return brace_series(g_series(order, residue_ring(modulus)));
}

/// 7G^2 - G + DG = 0 (mod 10).
inline CongruenceCheck check_mod10(std::size_t order, const MaybePerturbation& p = {})
{
    auto brace = brace_mod(order, 10);
    detail::apply(brace, p);
    return zero_check("mod10", brace);
}

/// 7G^2 - G + DG = 3 P_{-2} (D^2 - D) P_2 (mod 5).
inline CongruenceCheck check_mod5_reduction(std::size_t order, const MaybePerturbation& p = {})
{
    const residue_ring z5(5);
    const auto partitions = partition_series(order, z5);
    const auto p2 = pow_int(partitions, 2);
    const auto rhs = z5.from_int(3) * (pow_int(partitions, -2) * (D(D(p2)) - D(p2)));
    auto diff = brace_series(g_series(order, z5)) - rhs;
    detail::apply(diff, p);
    return zero_check("mod5_reduction", diff);
}

/// The coefficient of q^k in P_2 is divisible by 5 unless k = 0, 1 (mod 5).
/// One-directional: nothing is claimed for k = 0, 1 (mod 5).
inline CongruenceCheck check_support_lemma(std::size_t order, const MaybePerturbation& p = {})
{
    auto p2 = pow_int(partition_series(order, residue_ring(5)), 2);
    detail::apply(p2, p);
    std::optional<CheckFailure> failure;
    for (std::size_t k = 0; k <= order; ++k) {
        if (k % 5 == 0 || k % 5 == 1)
            continue;
        if (p2[k] != 0) {
            failure = CheckFailure{k, std::to_string(p2[k])};
            break;
        }
    }
    return detail::make_check("support_lemma", 5, order, std::move(failure));
}

/// D^2 P_2 = D P_2 (mod 5).
inline CongruenceCheck check_support_consequence(std::size_t order, const MaybePerturbation& p = {})
{
    const auto p2 = pow_int(partition_series(order, residue_ring(5)), 2);
    const auto dp2 = D(p2);
    auto diff = D(dp2) - dp2;
    detail::apply(diff, p);
    return zero_check("support_consequence", diff);
}

/// 7G^2 - G + DG = P_{-1} (D^2 + D) P (mod 2).
inline CongruenceCheck check_mod2_reduction(std::size_t order, const MaybePerturbation& p = {})
{
    const residue_ring z2(2);
    const auto partitions = partition_series(order, z2);
    const auto dp = D(partitions);
    const auto rhs = invert(partitions) * (D(dp) + dp);
    auto diff = brace_series(g_series(order, z2)) - rhs;
    detail::apply(diff, p);
    return zero_check("mod2_reduction", diff);
}

/// [q^k] (D^2 + D) P = k (k+1) p(k) exactly, and that number is even.
inline CongruenceCheck check_parity_factor(std::size_t order, const MaybePerturbation& p = {})
{
    const auto partitions = partition_series(order);
    const auto dp = D(partitions);
    auto lhs = D(dp) + dp;
    detail::apply(lhs, p);
    std::optional<CheckFailure> failure;
    for (std::size_t k = 0; k <= order; ++k) {
        const Rational expected = Rational(Integer(static_cast<unsigned long>(k)) *
                                           static_cast<unsigned long>(k + 1)) *
                                  partitions[k];
        const bool even = is_integer(lhs[k]) && mpz_even_p(lhs[k].get_num_mpz_t());
        if (lhs[k] != expected || !even) {
            failure = CheckFailure{k, to_string(lhs[k])};
            break;
        }
    }
    return detail::make_check("parity_factor", 2, order, std::move(failure));
}

/// G = P_{-1} DP exactly.
inline CongruenceCheck check_log_derivative(const qform_catalog& catalog, const MaybePerturbation& p = {})
{
    auto lhs = catalog.G();
    detail::apply(lhs, p);
    return equality_check("log_derivative", lhs, catalog.p_alpha(-1) * D(catalog.P()));
}

/// D P_12 = 12 P_12 G exactly.
inline CongruenceCheck check_dp12(const qform_catalog& catalog, const MaybePerturbation& p = {})
{
    const auto p12 = catalog.p_alpha(12);
    auto lhs = D(p12);
    detail::apply(lhs, p);
    return equality_check("dp12", lhs, Rational(12) * (p12 * catalog.G()));
}

/// Names accepted by run_selected, in execution order.
inline const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names = {
        "log_derivative",
        "dp12",
        "theorem_a",
        "theorem_b",
        "theorem_b_derivation",
        "integrality_a",
        "integrality_b",
        "mod10",
        "mod5_reduction",
        "support_lemma",
        "support_consequence",
        "mod2_reduction",
        "parity_factor",
    };
    return names;
}

inline bool is_check_name(std::string_view name)
{
    const auto& names = check_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

/// Runs the named checks at one order, in the order of check_names().
inline VerificationReport run_selected(std::size_t order, const std::vector<std::string>& selected,
                                       const std::optional<TargetedPerturbation>& mutation = {})
{
    for (const auto& name : selected)
        if (!is_check_name(name))
            throw std::invalid_argument("unknown check: " + name);
    if (mutation && !is_check_name(mutation->check))
        throw std::invalid_argument("unknown check: " + mutation->check);

    const auto wanted = [&](const std::string& name) {
        return std::find(selected.begin(), selected.end(), name) != selected.end();
    };
    const auto hook = [&](const std::string& name) -> MaybePerturbation {
        if (mutation && mutation->check == name)
            return mutation->perturbation;
        return std::nullopt;
    };

    // the exact checks share one catalog and one table of GW data
    std::optional<qform_catalog> catalog;
    std::optional<GWTable> table;
    const auto exact = [&]() -> const qform_catalog& {
        if (!catalog) {
            catalog.emplace(order, std::vector<long long>{12, -1});
            table = make_gw_table(*catalog);
        }
        return *catalog;
    };

    VerificationReport report;
    for (const auto& name : check_names()) {
        if (!wanted(name))
            continue;
        const auto p = hook(name);
        if (name == "log_derivative") {
            report.checks.push_back(check_log_derivative(exact(), p));
        } else if (name == "dp12") {
            report.checks.push_back(check_dp12(exact(), p));
        } else if (name == "theorem_a") {
            exact();
            auto lhs = a_direct_series(*table);
            detail::apply(lhs, p);
            report.checks.push_back(equality_check(name, lhs, a_closed_series(*catalog)));
        } else if (name == "theorem_b") {
            exact();
            auto lhs = b_direct_series(*table);
            detail::apply(lhs, p);
            report.checks.push_back(equality_check(name, lhs, b_closed_series(*catalog)));
        } else if (name == "theorem_b_derivation") {
            auto lhs = b_derivation_series(exact());
            detail::apply(lhs, p);
            report.checks.push_back(equality_check(name, lhs, b_closed_series(*catalog)));
        } else if (name == "integrality_a") {
            auto f = a_closed_series(exact());
            detail::apply(f, p);
            report.checks.push_back(integrality_check(name, f));
        } else if (name == "integrality_b") {
            auto f = b_closed_series(exact());
            detail::apply(f, p);
            report.checks.push_back(integrality_check(name, f));
        } else if (name == "mod10") {
            report.checks.push_back(check_mod10(order, p));
        } else if (name == "mod5_reduction") {
            report.checks.push_back(check_mod5_reduction(order, p));
        } else if (name == "support_lemma") {
            report.checks.push_back(check_support_lemma(order, p));
        } else if (name == "support_consequence") {
            report.checks.push_back(check_support_consequence(order, p));
        } else if (name == "mod2_reduction") {
            report.checks.push_back(check_mod2_reduction(order, p));
        } else if (name == "parity_factor") {
            report.checks.push_back(check_parity_factor(order, p));
        }
    }
    return report;
}

inline VerificationReport run_all(std::size_t order,
                                  const std::optional<TargetedPerturbation>& mutation = {})
{
    return run_selected(order, check_names(), mutation);
}

/// "name  modulus  PASS|FAIL [first failure]" as printed by the CLI.
inline std::string format_check(const CongruenceCheck& c)
{
    std::ostringstream os;
    os << c.name << ' ' << (c.modulus == 0 ? std::string("exact") : "mod " + std::to_string(c.modulus))
       << " order " << c.order << ' ' << (c.passed ? "PASS" : "FAIL");
    if (c.first_failure)
        os << " first failure at k=" << c.first_failure->index << " (" << c.first_failure->value << ')';
    return os.str();
}

} // namespace qbps
