#include "glrestrict/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace glr {

namespace {

constexpr std::uint64_t pack(std::uint16_t code, std::uint32_t e) { return (std::uint64_t(code) << 32) | e; }
constexpr std::uint16_t code_of(std::uint64_t f) { return static_cast<std::uint16_t>(f >> 32); }
constexpr std::uint32_t exp_of(std::uint64_t f) { return static_cast<std::uint32_t>(f & 0xffffffffu); }

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(VarId v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.packed_.push_back(pack(v.code(), exponent));
    m.degree_ = exponent;
  }
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
  const auto c = v.code();
  for (auto f : packed_) {
    if (code_of(f) == c) return exp_of(f);
    if (code_of(f) > c) break;
  }
  return 0;
}

std::vector<Monomial::Factor> Monomial::factors() const {
  std::vector<Factor> out;
  out.reserve(packed_.size());
  for (std::size_t i = 0; i < packed_.size(); ++i) out.push_back(factor(i));
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.packed_.reserve(packed_.size() + other.packed_.size());
  auto a = packed_.begin();
  auto b = other.packed_.begin();
  while (a != packed_.end() && b != other.packed_.end()) {
    if (code_of(*a) < code_of(*b)) {
      out.packed_.push_back(*a++);
    } else if (code_of(*b) < code_of(*a)) {
      out.packed_.push_back(*b++);
    } else {
      out.packed_.push_back(pack(code_of(*a), exp_of(*a) + exp_of(*b)));
      ++a;
      ++b;
    }
  }
  out.packed_.insert(out.packed_.end(), a, packed_.end());
  out.packed_.insert(out.packed_.end(), b, other.packed_.end());
  out.degree_ = degree_ + other.degree_;
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  if (other.degree_ > degree_) return std::nullopt;
  Monomial out;
  auto b = other.packed_.begin();
  for (auto f : packed_) {
    if (b != other.packed_.end() && code_of(*b) < code_of(f)) return std::nullopt;
    if (b != other.packed_.end() && code_of(*b) == code_of(f)) {
      if (exp_of(*b) > exp_of(f)) return std::nullopt;
      if (exp_of(f) > exp_of(*b)) out.packed_.push_back(pack(code_of(f), exp_of(f) - exp_of(*b)));
      ++b;
    } else {
      out.packed_.push_back(f);
    }
  }
  if (b != other.packed_.end()) return std::nullopt;
  out.degree_ = degree_ - other.degree_;
  return out;
}

Monomial Monomial::lower(VarId v) const {
  Monomial out = *this;
  const auto c = v.code();
  for (auto it = out.packed_.begin(); it != out.packed_.end(); ++it) {
    if (code_of(*it) != c) continue;
    if (exp_of(*it) == 1) {
      out.packed_.erase(it);
    } else {
      *it = pack(c, exp_of(*it) - 1);
    }
    --out.degree_;
    return out;
  }
  throw std::logic_error("Monomial::lower: variable absent");
}

Monomial Monomial::without(VarId v) const {
  Monomial out;
  for (auto f : packed_) {
    if (code_of(f) == v.code()) continue;
    out.packed_.push_back(f);
    out.degree_ += exp_of(f);
  }
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  const auto n = std::min(a.packed_.size(), b.packed_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto ca = code_of(a.packed_[i]);
    const auto cb = code_of(b.packed_[i]);
    // The monomial carrying the earlier variable has the larger exponent vector.
    if (ca != cb) return ca > cb;
    const auto ea = exp_of(a.packed_[i]);
    const auto eb = exp_of(b.packed_[i]);
    if (ea != eb) return ea < eb;
  }
  return a.packed_.size() < b.packed_.size();
}

std::size_t Monomial::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto f : packed_) {
    h ^= f + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

MultiPoly::MultiPoly(long c) {
  if (c != 0) terms_.emplace(Monomial(), Rational(c));
}

MultiPoly MultiPoly::variable(VarId v) { return term(Monomial::of(v), Rational(1)); }

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational MultiPoly::constant_term() const {
  if (terms_.empty() || !terms_.begin()->first.is_one()) return Rational(0);
  return terms_.begin()->second;
}

std::uint32_t MultiPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

std::uint32_t MultiPoly::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

std::set<VarId> MultiPoly::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) out.insert(m.factor(i).var);
  }
  return out;
}

std::pair<Monomial, Rational> MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (this == &other) return *this *= Rational(2);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (this == &other) {
    terms_.clear();
    return *this;
  }
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

void MultiPoly::add_scaled(const MultiPoly& other, const Rational& c, const Monomial& m) {
  if (c == 0) return;
  if (this == &other) {
    const MultiPoly copy = other;
    add_scaled(copy, c, m);
    return;
  }
  for (const auto& [mono, coeff] : other.terms_) add_term(m.is_one() ? mono : mono * m, coeff * c);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& single = a.terms_.size() == 1 ? a : b;
    const auto& other = a.terms_.size() == 1 ? b : a;
    const auto& [m, c] = *single.terms_.begin();
    for (const auto& [mono, coeff] : other.terms_) out.terms_.emplace_hint(out.terms_.end(), mono * m, coeff * c);
    // Multiplying by a fixed monomial preserves the order, but the hint
    // above relies on that; duplicates cannot occur.
    return out;
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Rational tmp;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(ma * mb, tmp);
      if (!inserted) it->second += tmp;
    }
  }
  std::vector<std::pair<Monomial, Rational>> sorted;
  sorted.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) sorted.emplace_back(m, std::move(c));
  }
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [m, c] : sorted) out.terms_.emplace_hint(out.terms_.end(), std::move(m), std::move(c));
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1L);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::partial(VarId v) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    const auto e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(m.lower(v), c * e);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::map<VarId, MultiPoly>& bindings) const {
  // Powers of each bound value are cached since kernels reuse them heavily.
  std::map<std::pair<VarId, std::uint32_t>, MultiPoly> powers;
  auto power = [&](VarId v, std::uint32_t e) -> const MultiPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    return powers.emplace(key, bindings.at(v).pow(e)).first->second;
  };
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial kept;
    MultiPoly value(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto f = m.factor(i);
      if (bindings.count(f.var) != 0) {
        value *= power(f.var, f.exponent);
      } else {
        kept = kept * Monomial::of(f.var, f.exponent);
      }
    }
    out.add_scaled(value, Rational(1), kept);
  }
  return out;
}

MultiPoly MultiPoly::truncate(VarId v, std::uint32_t max_degree) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) <= max_degree) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

MultiPoly MultiPoly::coefficient_of(VarId v, std::uint32_t e) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) == e) out.add_term(m.without(v), c);
  }
  return out;
}

std::map<Monomial, MultiPoly> MultiPoly::split_by_kind(VarKind kind) const {
  std::map<Monomial, MultiPoly> out;
  for (const auto& [m, c] : terms_) {
    Monomial selected;
    Monomial rest;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto f = m.factor(i);
      (f.var.kind == kind ? selected : rest) = (f.var.kind == kind ? selected : rest) * Monomial::of(f.var, f.exponent);
    }
    out[selected].add_term(rest, c);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (magnitude != 1 || m.is_one()) {
      os << magnitude.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto f = m.factor(i);
      if (wrote) os << " * ";
      os << glr::to_string(f.var);
      if (f.exponent != 1) os << "^" << f.exponent;
      wrote = true;
    }
  }
  return os.str();
}

std::optional<MultiPoly> exact_divide(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (den.is_constant()) return num * (Rational(1) / den.constant_term());
  const auto [lead_m, lead_c] = den.leading_term();
  MultiPoly remainder = num;
  MultiPoly quotient;
  while (!remainder.is_zero()) {
    const auto [m, c] = remainder.leading_term();
    auto q = m.divide(lead_m);
    if (!q) return std::nullopt;
    const Rational factor = c / lead_c;
    quotient += MultiPoly::term(*q, factor);
    remainder.add_scaled(den, -factor, *q);
  }
  return quotient;
}

}  // namespace glr
