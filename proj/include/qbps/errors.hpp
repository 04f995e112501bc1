#pragma once

#include <stdexcept>
#include <string>

namespace qbps {

/// Coefficient vector and truncation order disagree.
class construction_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A series (or ring element) without a multiplicative inverse was inverted.
class not_invertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A rational coefficient has a denominator that is not a unit modulo m.
class reduction_undefined : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two residue series with different moduli were combined.
class modulus_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace qbps
