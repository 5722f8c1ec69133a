#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace newton_mv {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Always "p/q" (an integer is written "p/1"); used by the JSON reports.
std::string to_fraction_string(const Rational& q);

/// Accepts "p", "-p", "p/q"; the result is canonicalized.
/// Throws InvalidArgument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);

/// Exact integer power; exponent 0 gives 1.
Rational pow(const Rational& base, unsigned exponent);

bool is_integer(const Rational& q);

} // namespace newton_mv
