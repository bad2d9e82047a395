#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace partcount {

/// Arbitrary-precision signed integer used for every exact value in the library.
using Integer = mpz_class;

/// Raised when an argument violates a documented precondition.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by test-only evaluators (enumerations, explicit formulas) outside
/// the size window they support.
class UnsupportedSizeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// An exact division left a remainder. Always an implementation bug.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Returns num / den, throwing InconsistencyError if den does not divide num.
Integer exact_div(const Integer& num, const Integer& den, std::string_view what);

std::string to_decimal(const Integer& value);

/// Parses an optionally signed decimal string. Throws DomainError on garbage.
Integer from_decimal(std::string_view text);

std::size_t decimal_digits(const Integer& value);

}  // namespace partcount
