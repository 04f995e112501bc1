#pragma once

// Coefficient rings for truncated series.
//
// A ring policy is a small value type that knows how to do arithmetic on its
// value_type. Runtime state (the modulus of Z/m) lives in the policy so that
// zero() and one() are always well defined.

#include <concepts>
#include <cstdint>
#include <string>

#include "qbps/errors.hpp"
#include "qbps/rational.hpp"

namespace qbps {

template <typename R>
concept CoefficientRing = std::equality_comparable<R> && requires(const R& ring,
                                                                  typename R::value_type& acc,
                                                                  const typename R::value_type& a,
                                                                  long long n) {
    typename R::value_type;
    { ring.zero() } -> std::same_as<typename R::value_type>;
    { ring.one() } -> std::same_as<typename R::value_type>;
    { ring.from_int(n) } -> std::same_as<typename R::value_type>;
    { ring.add(a, a) } -> std::same_as<typename R::value_type>;
    { ring.sub(a, a) } -> std::same_as<typename R::value_type>;
    { ring.neg(a) } -> std::same_as<typename R::value_type>;
    { ring.mul(a, a) } -> std::same_as<typename R::value_type>;
    { ring.fma(acc, a, a) };
    { ring.is_zero(a) } -> std::same_as<bool>;
    { ring.is_unit(a) } -> std::same_as<bool>;
    { ring.inverse(a) } -> std::same_as<typename R::value_type>;
    { ring.str(a) } -> std::same_as<std::string>;
};

/// The field Q with unbounded numerators and denominators.
struct rational_ring {
    using value_type = Rational;

    value_type zero() const { return Rational(0); }
    value_type one() const { return Rational(1); }
    value_type from_int(long long n) const
    {
        Rational r;
        mpz_set_si(r.get_num_mpz_t(), static_cast<long>(n));
        return r;
    }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    void fma(value_type& acc, const value_type& a, const value_type& b) const
    {
        if (sgn(a) != 0 && sgn(b) != 0)
            acc += a * b;
    }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool is_unit(const value_type& a) const { return sgn(a) != 0; }
    value_type inverse(const value_type& a) const
    {
        if (sgn(a) == 0)
            throw not_invertible("zero has no inverse in Q");
        return 1 / a;
    }
    std::string str(const value_type& a) const { return to_string(a); }

    bool operator==(const rational_ring&) const = default;
};

/// Z/m for 2 <= m < 2^32, elements stored in [0, m).
class residue_ring {
public:
    using value_type = std::uint64_t;

    explicit residue_ring(std::uint64_t modulus) : modulus_(modulus)
    {
        if (modulus < 2 || modulus >= (std::uint64_t{1} << 32))
            throw std::invalid_argument("modulus must lie in [2, 2^32)");
    }

    std::uint64_t modulus() const { return modulus_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long n) const
    {
        const auto m = static_cast<long long>(modulus_);
        long long r = n % m;
        return static_cast<value_type>(r < 0 ? r + m : r);
    }
    value_type from_rational(const Rational& r) const { return residue_of(r, modulus_); }
    value_type add(value_type a, value_type b) const
    {
        const value_type s = a + b;
        return s >= modulus_ ? s - modulus_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + modulus_ - b; }
    value_type neg(value_type a) const { return a == 0 ? 0 : modulus_ - a; }
    value_type mul(value_type a, value_type b) const { return (a * b) % modulus_; }
    void fma(value_type& acc, value_type a, value_type b) const { acc = (acc + a * b) % modulus_; }
    bool is_zero(value_type a) const { return a == 0; }
    bool is_unit(value_type a) const { return gcd(a, modulus_) == 1; }
    value_type inverse(value_type a) const
    {
        // extended Euclid on (a, m)
        long long r0 = static_cast<long long>(modulus_), r1 = static_cast<long long>(a);
        long long t0 = 0, t1 = 1;
        while (r1 != 0) {
            const long long q = r0 / r1;
            long long tmp = r0 - q * r1;
            r0 = r1;
            r1 = tmp;
            tmp = t0 - q * t1;
            t0 = t1;
            t1 = tmp;
        }
        if (r0 != 1)
            throw not_invertible(std::to_string(a) + " is not a unit modulo " +
                                 std::to_string(modulus_));
        return from_int(t0);
    }
    std::string str(value_type a) const { return std::to_string(a); }

    bool operator==(const residue_ring&) const = default;

private:
    static value_type gcd(value_type a, value_type b)
    {
        while (b != 0) {
            const value_type t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    std::uint64_t modulus_;
};

static_assert(CoefficientRing<rational_ring>);
static_assert(CoefficientRing<residue_ring>);

} // namespace qbps
