#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace stirdet {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

/// Raised when an argument falls outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exact division left a remainder. Always an implementation bug.
class ExactnessViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Divides `num` by `den`, throwing ExactnessViolation unless the remainder is zero.
ExactInt exact_div(const ExactInt& num, const ExactInt& den, std::string_view context);

/// In-place variant used on hot paths (Bareiss).
void exact_div_inplace(ExactInt& num, const ExactInt& den, std::string_view context);

ExactInt ipow(const ExactInt& base, unsigned long exponent);

/// base^exponent for any integer exponent; base must be nonzero when exponent < 0.
ExactRat rpow(const ExactRat& base, long exponent);

ExactInt factorial(int n);

/// Returns the integer value of `r`, or throws ExactnessViolation if r is not integral.
ExactInt to_integer(const ExactRat& r, std::string_view context);

ExactRat make_rat(const ExactInt& num, const ExactInt& den);

std::string to_string(const ExactInt& v);
std::string to_string(const ExactRat& v);

/// Parses a decimal integer ("-12", "7"). Throws std::invalid_argument on junk.
ExactInt parse_int(std::string_view text);

/// Parses "p" or "p/q". Throws std::invalid_argument on junk or a zero denominator.
ExactRat parse_rat(std::string_view text);

}  // namespace stirdet
