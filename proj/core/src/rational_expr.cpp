#include "glrestrict/rational_expr.hpp"

#include <stdexcept>
#include <vector>

namespace glr {

RationalExpr::RationalExpr(MultiPoly numer, MultiPoly denom) : numer_(std::move(numer)), denom_(std::move(denom)) {
  if (denom_.is_zero()) throw std::domain_error("rational expression with zero denominator");
  normalize();
}

void RationalExpr::normalize() {
  if (numer_.is_zero()) {
    denom_ = MultiPoly(1L);
    return;
  }
  if (denom_.is_constant()) {
    const Rational c = denom_.constant_term();
    if (c != 1) numer_ *= Rational(1) / c;
    denom_ = MultiPoly(1L);
    return;
  }
  if (numer_ == denom_) {
    numer_ = MultiPoly(1L);
    denom_ = MultiPoly(1L);
  }
}

std::optional<MultiPoly> RationalExpr::to_polynomial() const {
  if (denom_.is_constant()) return numer_;
  return exact_divide(numer_, denom_);
}

RationalExpr RationalExpr::inverse() const {
  if (numer_.is_zero()) throw std::domain_error("inverse of zero rational expression");
  return RationalExpr(denom_, numer_);
}

RationalExpr RationalExpr::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  const auto u = static_cast<unsigned>(e);
  return RationalExpr(numer_.pow(u), denom_.pow(u));
}

RationalExpr& RationalExpr::operator+=(const RationalExpr& o) {
  if (denom_ == o.denom_) {
    numer_ += o.numer_;
  } else {
    numer_ = numer_ * o.denom_ + o.numer_ * denom_;
    denom_ = denom_ * o.denom_;
  }
  normalize();
  return *this;
}

RationalExpr& RationalExpr::operator-=(const RationalExpr& o) { return *this += -o; }

RationalExpr& RationalExpr::operator*=(const RationalExpr& o) {
  // Cancel the cheap cases where one factor's numerator is the other's denominator.
  if (numer_ == o.denom_) {
    numer_ = o.numer_;
  } else if (o.numer_ == denom_) {
    denom_ = o.denom_;
  } else {
    numer_ *= o.numer_;
    denom_ *= o.denom_;
  }
  normalize();
  return *this;
}

RationalExpr& RationalExpr::operator/=(const RationalExpr& o) { return *this *= o.inverse(); }

bool operator==(const RationalExpr& a, const RationalExpr& b) {
  if (a.denom_ == b.denom_) return a.numer_ == b.numer_;
  return a.numer_ * b.denom_ == b.numer_ * a.denom_;
}

std::string RationalExpr::to_string() const {
  if (denom_ == MultiPoly(1L)) return numer_.to_string();
  return "(" + numer_.to_string() + ") / (" + denom_.to_string() + ")";
}

RationalExpr substitute(const MultiPoly& p, const std::map<VarId, RationalExpr>& bindings) {
  // Group the distinct non-trivial denominators.
  std::vector<MultiPoly> dens;
  std::map<VarId, int> group;
  for (const auto& [v, e] : bindings) {
    if (e.denom().is_constant()) {
      group[v] = -1;
      continue;
    }
    int idx = -1;
    for (std::size_t i = 0; i < dens.size(); ++i) {
      if (dens[i] == e.denom()) {
        idx = static_cast<int>(i);
        break;
      }
    }
    if (idx < 0) {
      dens.push_back(e.denom());
      idx = static_cast<int>(dens.size()) - 1;
    }
    group[v] = idx;
  }

  std::vector<std::uint32_t> max_deg(dens.size(), 0);
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::uint32_t> deg(dens.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto f = m.factor(i);
      auto it = group.find(f.var);
      if (it != group.end() && it->second >= 0) deg[it->second] += f.exponent;
    }
    for (std::size_t g = 0; g < dens.size(); ++g) max_deg[g] = std::max(max_deg[g], deg[g]);
  }

  std::map<std::pair<VarId, std::uint32_t>, MultiPoly> num_pow;
  std::map<std::pair<std::size_t, std::uint32_t>, MultiPoly> den_pow;
  auto numer_power = [&](VarId v, std::uint32_t e) -> const MultiPoly& {
    auto key = std::make_pair(v, e);
    auto it = num_pow.find(key);
    if (it != num_pow.end()) return it->second;
    return num_pow.emplace(key, bindings.at(v).numer().pow(e)).first->second;
  };
  auto denom_power = [&](std::size_t g, std::uint32_t e) -> const MultiPoly& {
    auto key = std::make_pair(g, e);
    auto it = den_pow.find(key);
    if (it != den_pow.end()) return it->second;
    return den_pow.emplace(key, dens[g].pow(e)).first->second;
  };

  MultiPoly numer;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept;
    MultiPoly value(c);
    std::vector<std::uint32_t> deg(dens.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto f = m.factor(i);
      auto it = group.find(f.var);
      if (it == group.end()) {
        kept = kept * Monomial::of(f.var, f.exponent);
        continue;
      }
      value *= numer_power(f.var, f.exponent);
      if (it->second >= 0) deg[it->second] += f.exponent;
    }
    for (std::size_t g = 0; g < dens.size(); ++g) {
      if (max_deg[g] > deg[g]) value *= denom_power(g, max_deg[g] - deg[g]);
    }
    numer.add_scaled(value, Rational(1), kept);
  }
  MultiPoly denom(1L);
  for (std::size_t g = 0; g < dens.size(); ++g) {
    if (max_deg[g] > 0) denom *= denom_power(g, max_deg[g]);
  }
  return RationalExpr(std::move(numer), std::move(denom));
}

RationalExpr substitute(const RationalExpr& e, const std::map<VarId, RationalExpr>& bindings) {
  return substitute(e.numer(), bindings) / substitute(e.denom(), bindings);
}

}  // namespace glr
