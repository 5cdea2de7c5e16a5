#include "glrestrict/rational.hpp"

#include <stdexcept>

namespace glr {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace glr
