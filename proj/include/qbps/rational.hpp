#pragma once

// Exact rationals backed by GMP. mpq_class keeps every value canonical:
// positive denominator, numerator and denominator coprime.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "qbps/errors.hpp"

namespace qbps {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "p/q" in lowest terms, integers without "/1".
inline std::string to_string(const Rational& r)
{
    if (is_integer(r))
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p" or "p/q" (q nonzero); the result is canonical.
inline Rational parse_rational(const std::string& s)
{
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: " + s);
    if (r.get_den() == 0)
        throw std::domain_error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

/// Residue of r = p/q modulo m, i.e. p * q^{-1} mod m in [0, m).
inline std::uint64_t residue_of(const Rational& r, std::uint64_t modulus)
{
    const Integer m(static_cast<unsigned long>(modulus));
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), r.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
        throw reduction_undefined("denominator " + r.get_den().get_str() +
                                  " is not invertible modulo " + m.get_str());
    Integer v = r.get_num() * inv;
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return v.get_ui();
}

} // namespace qbps
