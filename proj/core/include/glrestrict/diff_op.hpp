#pragma once

#include "glrestrict/poly.hpp"

#include <map>
#include <string>

namespace glr {

/// First-order differential operator a_0 + sum_v a_v d/dv with polynomial coefficients.
class DiffOp {
 public:
  DiffOp() = default;
  static DiffOp multiplication(MultiPoly p);
  static DiffOp derivative(VarId v, MultiPoly coeff = MultiPoly(1L));

  [[nodiscard]] const MultiPoly& zero_order() const { return zero_order_; }
  [[nodiscard]] const std::map<VarId, MultiPoly>& first_order() const { return first_order_; }
  [[nodiscard]] bool is_zero() const { return zero_order_.is_zero() && first_order_.empty(); }

  DiffOp& add_zero_order(const MultiPoly& p);
  DiffOp& add_derivative(VarId v, const MultiPoly& coeff);

  [[nodiscard]] MultiPoly apply(const MultiPoly& f) const;
  MultiPoly operator()(const MultiPoly& f) const { return apply(f); }

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const Rational& c);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const Rational& c, DiffOp a) { return a *= c; }

  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.zero_order_ == b.zero_order_ && a.first_order_ == b.first_order_;
  }

  [[nodiscard]] std::string to_string() const;

 private:
  MultiPoly zero_order_;
  std::map<VarId, MultiPoly> first_order_;  // never holds a zero coefficient
};

/// [A, B] = AB - BA, again first order.
DiffOp commutator(const DiffOp& a, const DiffOp& b);

/// op applied e times.
MultiPoly apply_power(const DiffOp& op, MultiPoly f, unsigned e);

}  // namespace glr
