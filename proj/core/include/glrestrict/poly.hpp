#pragma once

#include "glrestrict/rational.hpp"
#include "glrestrict/var.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace glr {

/// A power product of variables, stored as factors sorted by variable code.
class Monomial {
 public:
  struct Factor {
    VarId var;
    std::uint32_t exponent;
  };

  Monomial() = default;
  static Monomial of(VarId v, std::uint32_t exponent = 1);

  [[nodiscard]] std::uint32_t degree() const { return degree_; }
  [[nodiscard]] std::uint32_t exponent(VarId v) const;
  [[nodiscard]] bool is_one() const { return packed_.empty(); }
  [[nodiscard]] std::size_t size() const { return packed_.size(); }
  [[nodiscard]] Factor factor(std::size_t i) const {
    return {VarId::from_code(static_cast<std::uint16_t>(packed_[i] >> 32)),
            static_cast<std::uint32_t>(packed_[i] & 0xffffffffu)};
  }
  [[nodiscard]] std::vector<Factor> factors() const;

  Monomial operator*(const Monomial& other) const;
  /// this / other when other divides this.
  [[nodiscard]] std::optional<Monomial> divide(const Monomial& other) const;
  /// Same monomial with the exponent of v lowered by one (v must occur).
  [[nodiscard]] Monomial lower(VarId v) const;
  /// Drops v entirely.
  [[nodiscard]] Monomial without(VarId v) const;

  /// Graded lexicographic order: total degree first, then lexicographic on
  /// exponent vectors with variables ordered by (kind, row, col).
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.packed_ == b.packed_;
  }

  [[nodiscard]] std::size_t hash() const;

 private:
  // (var code << 32) | exponent, increasing var code.
  std::vector<std::uint64_t> packed_;
  std::uint32_t degree_ = 0;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms live in a map keyed by monomial in graded lexicographic order and
/// never hold a zero coefficient, so equal polynomials have identical maps.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c);             // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(static_cast<long>(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(VarId v);
  static MultiPoly term(const Monomial& m, const Rational& c);

  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// Constant term (coefficient of the empty monomial).
  [[nodiscard]] Rational constant_term() const;
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] std::uint32_t degree() const;
  [[nodiscard]] std::uint32_t degree_in(VarId v) const;
  [[nodiscard]] std::set<VarId> variables() const;
  /// Largest monomial in the term order with its coefficient.
  [[nodiscard]] std::pair<Monomial, Rational> leading_term() const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);
  /// Adds c * m * other without building the intermediate product.
  void add_scaled(const MultiPoly& other, const Rational& c, const Monomial& m = Monomial());

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(int c, MultiPoly a) { return a *= Rational(c); }
  friend MultiPoly operator*(MultiPoly a, int c) { return a *= Rational(c); }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] MultiPoly pow(unsigned e) const;
  [[nodiscard]] MultiPoly partial(VarId v) const;
  /// Simultaneous polynomial substitution; unbound variables are kept.
  [[nodiscard]] MultiPoly substitute(const std::map<VarId, MultiPoly>& bindings) const;
  /// Discards every term whose degree in v exceeds max_degree.
  [[nodiscard]] MultiPoly truncate(VarId v, std::uint32_t max_degree) const;
  /// Coefficient of v^e as a polynomial in the remaining variables.
  [[nodiscard]] MultiPoly coefficient_of(VarId v, std::uint32_t e) const;
  /// Splits by monomials in variables of the given kind: the map sends each
  /// such monomial to its coefficient polynomial in the other variables.
  [[nodiscard]] std::map<Monomial, MultiPoly> split_by_kind(VarKind kind) const;

  /// `coeff * z[i,j]^e * u[k,l]^e * t^e` terms joined by + / -, ascending order.
  [[nodiscard]] std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

/// Exact quotient num / den, or nullopt when den does not divide num.
/// Throws std::domain_error if den is zero.
std::optional<MultiPoly> exact_divide(const MultiPoly& num, const MultiPoly& den);

inline std::string to_string(const MultiPoly& p) { return p.to_string(); }

}  // namespace glr
