#pragma once

#include "glrestrict/poly.hpp"

#include <map>
#include <optional>
#include <string>

namespace glr {

/// Quotient of two polynomials with a nonzero denominator.
///
/// No gcd is taken. Equality is decided by cross-multiplication, so two
/// expressions may compare equal while holding different numerators.
/// Constant denominators are folded into the numerator.
class RationalExpr {
 public:
  RationalExpr() : denom_(1L) {}
  RationalExpr(MultiPoly p) : numer_(std::move(p)), denom_(1L) {}  // NOLINT(google-explicit-constructor)
  RationalExpr(const Rational& c) : numer_(c), denom_(1L) {}       // NOLINT(google-explicit-constructor)
  RationalExpr(long c) : numer_(c), denom_(1L) {}                  // NOLINT(google-explicit-constructor)
  RationalExpr(int c) : numer_(c), denom_(1L) {}                   // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when denom is the zero polynomial.
  RationalExpr(MultiPoly numer, MultiPoly denom);

  [[nodiscard]] const MultiPoly& numer() const { return numer_; }
  [[nodiscard]] const MultiPoly& denom() const { return denom_; }
  [[nodiscard]] bool is_zero() const { return numer_.is_zero(); }
  /// The exact polynomial value, or nullopt when the division leaves a remainder.
  [[nodiscard]] std::optional<MultiPoly> to_polynomial() const;

  [[nodiscard]] RationalExpr inverse() const;
  /// Integer power; negative exponents invert (error on zero).
  [[nodiscard]] RationalExpr pow(long e) const;

  RationalExpr& operator+=(const RationalExpr& o);
  RationalExpr& operator-=(const RationalExpr& o);
  RationalExpr& operator*=(const RationalExpr& o);
  RationalExpr& operator/=(const RationalExpr& o);

  friend RationalExpr operator+(RationalExpr a, const RationalExpr& b) { return a += b; }
  friend RationalExpr operator-(RationalExpr a, const RationalExpr& b) { return a -= b; }
  friend RationalExpr operator*(RationalExpr a, const RationalExpr& b) { return a *= b; }
  friend RationalExpr operator/(RationalExpr a, const RationalExpr& b) { return a /= b; }
  RationalExpr operator-() const { return RationalExpr(-numer_, denom_); }

  friend bool operator==(const RationalExpr& a, const RationalExpr& b);

  [[nodiscard]] std::string to_string() const;

 private:
  void normalize();
  MultiPoly numer_;
  MultiPoly denom_;
};

/// Simultaneous substitution of rational expressions for variables of p.
///
/// Bindings sharing a denominator are grouped, so the result denominator is a
/// product of powers of the distinct binding denominators.
RationalExpr substitute(const MultiPoly& p, const std::map<VarId, RationalExpr>& bindings);

/// Polynomial substitution followed by the same grouping; convenience overload.
RationalExpr substitute(const RationalExpr& e, const std::map<VarId, RationalExpr>& bindings);

inline std::string to_string(const RationalExpr& e) { return e.to_string(); }

}  // namespace glr
