#pragma once

#include <gmpxx.h>

#include <string>

namespace glr {

using Integer = mpz_class;

// mpq_class keeps numerator/denominator reduced with a positive denominator
// after every arithmetic operation; only direct num/den construction needs
// canonicalization, which make_rational performs.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den);

std::string to_string(const Rational& value);

}  // namespace glr
