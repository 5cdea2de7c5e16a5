#include "glrestrict/diff_op.hpp"

namespace glr {

DiffOp DiffOp::multiplication(MultiPoly p) {
  DiffOp op;
  op.zero_order_ = std::move(p);
  return op;
}

DiffOp DiffOp::derivative(VarId v, MultiPoly coeff) {
  DiffOp op;
  op.add_derivative(v, coeff);
  return op;
}

DiffOp& DiffOp::add_zero_order(const MultiPoly& p) {
  zero_order_ += p;
  return *this;
}

DiffOp& DiffOp::add_derivative(VarId v, const MultiPoly& coeff) {
  if (coeff.is_zero()) return *this;
  auto& slot = first_order_[v];
  slot += coeff;
  if (slot.is_zero()) first_order_.erase(v);
  return *this;
}

MultiPoly DiffOp::apply(const MultiPoly& f) const {
  MultiPoly out = zero_order_ * f;
  for (const auto& [v, a] : first_order_) {
    MultiPoly d = f.partial(v);
    if (d.is_zero()) continue;
    out += a * d;
  }
  return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  zero_order_ += o.zero_order_;
  for (const auto& [v, a] : o.first_order_) add_derivative(v, a);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  zero_order_ -= o.zero_order_;
  for (const auto& [v, a] : o.first_order_) add_derivative(v, -a);
  return *this;
}

DiffOp& DiffOp::operator*=(const Rational& c) {
  if (c == 0) {
    *this = DiffOp();
    return *this;
  }
  zero_order_ *= c;
  for (auto& [v, a] : first_order_) a *= c;
  return *this;
}

std::string DiffOp::to_string() const {
  std::string s = zero_order_.to_string();
  for (const auto& [v, a] : first_order_) s += " + (" + a.to_string() + ") d/d" + glr::to_string(v);
  return s;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) {
  // Second-order parts cancel; what is left is a_i d_i(b) - b_i d_i(a) on coefficients.
  DiffOp out;
  MultiPoly zero;
  for (const auto& [v, c] : a.first_order()) zero += c * b.zero_order().partial(v);
  for (const auto& [v, c] : b.first_order()) zero -= c * a.zero_order().partial(v);
  out.add_zero_order(zero);
  std::map<VarId, MultiPoly> first;
  for (const auto& [vi, ai] : a.first_order()) {
    for (const auto& [vj, bj] : b.first_order()) {
      MultiPoly d = bj.partial(vi);
      if (!d.is_zero()) first[vj] += ai * d;
    }
  }
  for (const auto& [vi, bi] : b.first_order()) {
    for (const auto& [vj, aj] : a.first_order()) {
      MultiPoly d = aj.partial(vi);
      if (!d.is_zero()) first[vj] -= bi * d;
    }
  }
  for (const auto& [v, c] : first) out.add_derivative(v, c);
  return out;
}

MultiPoly apply_power(const DiffOp& op, MultiPoly f, unsigned e) {
  for (unsigned i = 0; i < e && !f.is_zero(); ++i) f = op.apply(f);
  return f;
}

}  // namespace glr
