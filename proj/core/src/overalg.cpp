#include "glrestrict/overalg.hpp"

#include "glrestrict/generators.hpp"
#include "glrestrict/rep_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace glr {

const MultiPoly& Family::at(const Signature& q) const {
  static const MultiPoly zero;
  auto it = components_.find(q);
  return it == components_.end() ? zero : it->second;
}

void Family::set(const Signature& q, MultiPoly value) {
  if (!interlaces(r_, q)) throw std::invalid_argument("component " + q.to_string() + " does not interlace " + r_.to_string());
  if (value.is_zero()) {
    components_.erase(q);
  } else {
    components_[q] = std::move(value);
  }
}

void Family::add(const Signature& q, const MultiPoly& value) {
  if (value.is_zero()) return;
  set(q, at(q) + value);
}

Family& Family::operator+=(const Family& o) {
  for (const auto& [q, v] : o.components_) add(q, v);
  return *this;
}

Family& Family::operator-=(const Family& o) {
  for (const auto& [q, v] : o.components_) add(q, -v);
  return *this;
}

Family& Family::operator*=(const Rational& c) {
  if (c == 0) {
    components_.clear();
    return *this;
  }
  for (auto& [q, v] : components_) v *= c;
  return *this;
}

FamilyOperator f_generator_small(int n, const Signature& r, int k, int l) {
  if (k < 1 || k > n || l < 1 || l > n) throw std::out_of_range("small generator index out of range");
  return [n, r, k, l](const Family& g) {
    Family out(r);
    for (const auto& [q, v] : g.components()) out.set(q, generator(n, q, k, l, VarKind::U).apply(v));
    return out;
  };
}

Rational coeff_A(int m, const Signature& q, const Signature& r) {
  const int n = static_cast<int>(q.size());
  Integer num = 1;
  for (int j = m + 1; j <= n + 1; ++j) num *= q.entry(m) - r.entry(j) + j - m - 1;
  Integer den = 1;
  for (int a = 1; a <= n; ++a)
    if (a != m) den *= q.entry(m) - q.entry(a) + a - m;
  if (den == 0) throw std::domain_error("coeff_A: zero denominator");
  return make_rational(num, den);
}

Rational coeff_B(int m, const Signature& q, const Signature& r) {
  const int n = static_cast<int>(q.size());
  Integer num = 1;
  for (int j = 1; j <= m; ++j) num *= r.entry(j) - q.entry(m) + m - j;
  Integer den = 1;
  for (int a = 1; a < m; ++a) den *= q.entry(a) - q.entry(m) + m - a;
  for (int a = m + 1; a <= n; ++a) den *= q.entry(m) - q.entry(a) + a - m;
  if (den == 0) throw std::domain_error("coeff_B: zero denominator");
  return make_rational(num, den);
}

std::vector<std::vector<int>> index_chains(int first, int last) {
  if (last < first) throw std::invalid_argument("index chain needs first <= last");
  if (first == last) return {{first}};
  std::vector<std::vector<int>> out;
  const int inner = last - first - 1;
  for (unsigned mask = 0; mask < (1u << inner); ++mask) {
    std::vector<int> chain{first};
    for (int b = 0; b < inner; ++b)
      if (mask & (1u << b)) chain.push_back(first + 1 + b);
    chain.push_back(last);
    out.push_back(std::move(chain));
  }
  std::sort(out.begin(), out.end());
  return out;
}

MultiPoly composite_R(const std::vector<int>& chain, const MultiPoly& f, int n) {
  MultiPoly out = f;
  for (std::size_t t = chain.size(); t-- > 1 && !out.is_zero();) {
    out = zhelobenko_op(n, chain[t - 1], chain[t], VarKind::U).apply(out);
  }
  return out;
}

namespace {

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

FamilyOperator f_corner_raise(int n, const Signature& r, RaiseReading reading) {
  return [n, r, reading](const Family& g) {
    Family out(r);
    for (const auto& q : enumerate_interlacing(r)) {
      MultiPoly acc;
      for (int m = 1; m <= n; ++m) {
        auto source = Signature::try_make(q.shifted(static_cast<std::size_t>(m), -1));
        if (!source || !interlaces(r, *source)) continue;
        const MultiPoly& input = g.at(*source);
        if (input.is_zero()) continue;
        const Signature& at = reading == RaiseReading::kShiftedCoefficient ? *source : q;
        const Rational a = coeff_A(m, at, r);
        if (a == 0) continue;
        MultiPoly inner;
        for (const auto& chain : index_chains(1, m)) {
          Rational c(1);
          for (int l = 1; l <= m; ++l) {
            if (contains(chain, l)) continue;
            const long diff = reading == RaiseReading::kPrintedProduct ? at.entry(l) - at.entry(m) : at.entry(m) - at.entry(l);
            c *= l - m + diff;
          }
          if (c != 0) inner += composite_R(chain, input, n) * c;
        }
        acc += inner * a;
      }
      out.set(q, std::move(acc));
    }
    return out;
  };
}

FamilyOperator f_corner_lower(int n, const Signature& r, LowerReading reading) {
  return [n, r, reading](const Family& g) {
    Family out(r);
    for (const auto& q : enumerate_interlacing(r)) {
      MultiPoly acc;
      for (int m = 1; m <= n; ++m) {
        auto source = Signature::try_make(q.shifted(static_cast<std::size_t>(m), +1));
        if (!source || !interlaces(r, *source)) continue;
        const MultiPoly& input = g.at(*source);
        if (input.is_zero()) continue;
        const Rational b = coeff_B(m, q, r);
        if (b == 0) continue;
        const auto chains = reading == LowerReading::kCalibrated ? index_chains(m, n) : index_chains(1, m);
        MultiPoly inner;
        for (const auto& chain : chains) {
          Rational c(1);
          for (int l = m; l <= n; ++l)
            if (!contains(chain, l)) c *= q.entry(m) - q.entry(l) + l - m + 1;
          if (c != 0) inner += composite_R(chain, input, n) * c;
        }
        acc += inner * b;
      }
      out.set(q, std::move(acc));
    }
    return out;
  };
}

Family kernel_family(int n, const Signature& r) {
  if (r.size() != static_cast<std::size_t>(n + 1)) throw std::invalid_argument("r must have length n+1");
  Family out(r);
  for (const auto& q : enumerate_interlacing(r)) out.set(q, build_kernel(KernelParams(r, q)).value);
  return out;
}

const char* to_string(Corner corner) { return corner == Corner::kRaise ? "corner-raise" : "corner-lower"; }

DiffOp big_corner_generator(int n, const Signature& r, Corner corner) {
  if (corner == Corner::kRaise) return generator(n + 1, r.dual(), 1, n + 1, VarKind::Z);
  return generator(n + 1, r.dual(), n + 1, n, VarKind::Z);
}

namespace {

Family apply_corner(int n, const Signature& r, Corner corner, const Family& g, RaiseReading raise, LowerReading lower) {
  return corner == Corner::kRaise ? f_corner_raise(n, r, raise)(g) : f_corner_lower(n, r, lower)(g);
}

}  // namespace

bool intertwining_identity(int n, const Signature& r, Corner corner, int sign, RaiseReading raise, LowerReading lower) {
  const Family l = kernel_family(n, r);
  Family f(r);
  try {
    f = apply_corner(n, r, corner, l, raise, lower);
  } catch (const std::domain_error&) {
    return false;  // a reading that divides by zero is not a valid reading
  }
  const DiffOp e = big_corner_generator(n, r, corner);
  for (const auto& q : enumerate_interlacing(r)) {
    if (!(e.apply(l.at(q)) + f.at(q) * Rational(sign)).is_zero()) return false;
  }
  return true;
}

bool closed_form_agrees(const KernelParams& params, Corner corner) {
  const int n = params.n();
  const auto& r = params.r();
  const auto& q = params.q();
  const auto& fac = kernel_factors(n);
  const MultiPoly l = build_kernel(params).value;
  const MultiPoly el = big_corner_generator(n, r, corner).apply(l);
  if (corner == Corner::kRaise) {
    // E L = L sum_a (q_a - r_(a+1)) R_1a Psi_(a-1) / Phi_a
    MultiPoly all(1L);
    for (int a = 1; a <= n; ++a) all *= fac.phi[static_cast<std::size_t>(a)];
    MultiPoly sum;
    for (int a = 1; a <= n; ++a) {
      const long c = q.entry(a) - r.entry(a + 1);
      if (c == 0) continue;
      MultiPoly others(1L);
      for (int b = 1; b <= n; ++b)
        if (b != a) others *= fac.phi[static_cast<std::size_t>(b)];
      sum += r_psi(n, 1, a, a - 1) * others * Rational(c);
    }
    return el * all == l * sum;
  }
  // E L = L (z_n(n+1) (r_1 - q_1) - sum_{a<n} (r_(a+1) - q_(a+1)) R_(a+1)n Phi_(a+1) / Psi_a)
  MultiPoly all(1L);
  for (int a = 1; a < n; ++a) all *= fac.psi[static_cast<std::size_t>(a)];
  MultiPoly sum = MultiPoly::variable(VarId::z(n, n + 1)) * Rational(r.entry(1) - q.entry(1)) * all;
  for (int a = 1; a < n; ++a) {
    const long c = r.entry(a + 1) - q.entry(a + 1);
    if (c == 0) continue;
    MultiPoly others(1L);
    for (int b = 1; b < n; ++b)
      if (b != a) others *= fac.psi[static_cast<std::size_t>(b)];
    sum -= r_phi(n, a + 1, n, a + 1) * others * Rational(c);
  }
  return el * all == l * sum;
}

IntertwiningReport verify_intertwining(int n, const Signature& r, Corner corner) {
  IntertwiningReport report;
  const Family l = kernel_family(n, r);
  const Family f = apply_corner(n, r, corner, l, RaiseReading::kCalibrated, LowerReading::kCalibrated);
  const DiffOp e = big_corner_generator(n, r, corner);
  const int sign = corner == Corner::kRaise ? kRaiseSign : kLowerSign;
  for (const auto& q : enumerate_interlacing(r)) {
    const MultiPoly diff = e.apply(l.at(q)) + f.at(q) * Rational(sign);
    const bool closed = closed_form_agrees(KernelParams(r, q), corner);
    if (!diff.is_zero()) {
      report.identity_holds = false;
      if (report.detail.empty()) report.detail = "q=" + q.to_string() + ": E L + s F L = " + diff.to_string();
    }
    if (!closed) {
      report.closed_form_holds = false;
      if (report.detail.empty()) report.detail = "q=" + q.to_string() + ": closed form disagrees";
    }
    if (!diff.is_zero() || !closed) report.failures.push_back(q);
  }
  return report;
}

std::vector<Family> spanning_families(const Family& kernel) {
  std::map<Monomial, Family> split;
  for (const auto& [q, v] : kernel.components()) {
    for (const auto& [mono, coeff] : v.split_by_kind(VarKind::Z)) {
      auto it = split.try_emplace(mono, kernel.r()).first;
      it->second.set(q, coeff);
    }
  }
  std::vector<Family> out;
  for (auto& [m, f] : split) out.push_back(std::move(f));
  return out;
}

StabilityReport verify_family_stability(int n, const Signature& r) {
  StabilityReport report;
  const auto box = enumerate_interlacing(r);
  // Inputs outside the box are absent, so an in-box output may only reach
  // them through a vanishing coefficient.
  for (const auto& q : box) {
    for (int m = 1; m <= n; ++m) {
      auto down = Signature::try_make(q.shifted(static_cast<std::size_t>(m), -1));
      if ((!down || !interlaces(r, *down)) && coeff_A(m, q, r) != 0) {
        report.box_respected = false;
        report.detail = "A_" + std::to_string(m) + " nonzero at the wall, q=" + q.to_string();
      }
      auto up = Signature::try_make(q.shifted(static_cast<std::size_t>(m), +1));
      if ((!up || !interlaces(r, *up)) && coeff_B(m, q, r) != 0) {
        report.box_respected = false;
        report.detail = "B_" + std::to_string(m) + " nonzero at the wall, q=" + q.to_string();
      }
    }
  }
  const auto families = spanning_families(kernel_family(n, r));
  report.spanning_families = families.size();
  const auto raise = f_corner_raise(n, r);
  const auto lower = f_corner_lower(n, r);
  for (const auto& f : families) {
    for (const auto& image : {raise(f), lower(f)}) {
      for (const auto& [q, v] : image.components()) {
        if (!interlaces(r, q)) report.box_respected = false;
        if (!satisfies_zhelobenko(n, q, v, VarKind::U)) {
          report.components_in_vq = false;
          if (report.detail.empty()) report.detail = "component at q=" + q.to_string() + " leaves V_q";
        }
      }
    }
  }
  return report;
}

bool weight_relation_holds(int n, const Signature& r, Corner corner, int k) {
  const Family l = kernel_family(n, r);
  const auto fc = corner == Corner::kRaise ? f_corner_raise(n, r) : f_corner_lower(n, r);
  const auto fkk = f_generator_small(n, r, k, k);
  const Family bracket = fkk(fc(l)) - fc(fkk(l));
  long c = 0;
  if (corner == Corner::kRaise && k == 1) c = 1;
  if (corner == Corner::kLower && k == n) c = -1;
  return bracket == Rational(c) * fc(l);
}

bool lower_commutator_spot_check(int n, const Signature& r) {
  if (n < 2) throw std::invalid_argument("spot check needs n >= 2");
  const Family l = kernel_family(n, r);
  const auto lower = f_corner_lower(n, r);
  const auto small = f_generator_small(n, r, n, n - 1);
  const Family bracket = lower(small(l)) - small(lower(l));
  const DiffOp e = generator(n + 1, r.dual(), n + 1, n - 1, VarKind::Z);
  for (const auto& q : enumerate_interlacing(r)) {
    if (!(bracket.at(q) + e.apply(l.at(q))).is_zero()) return false;
  }
  return true;
}

}  // namespace glr
