#include "glrestrict/kernel.hpp"

#include "glrestrict/gauss.hpp"
#include "glrestrict/generators.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace glr {

KernelParams::KernelParams(Signature r, Signature q) : r_(std::move(r)), q_(std::move(q)) {
  if (q_.size() == 0 || !interlaces(r_, q_)) throw std::invalid_argument("non-interlacing signatures");
}

std::vector<long> KernelParams::phi_exponents() const {
  std::vector<long> out;
  for (int a = 1; a <= n(); ++a) out.push_back(q_.entry(a) - r_.entry(a + 1));
  return out;
}

std::vector<long> KernelParams::psi_exponents() const {
  std::vector<long> out;
  for (int a = 1; a < n(); ++a) out.push_back(r_.entry(a + 1) - q_.entry(a + 1));
  return out;
}

std::vector<long> KernelParams::phi_exponents_p_form() const {
  const Signature pp = p();
  std::vector<long> out;
  for (int a = 1; a <= n(); ++a) out.push_back(pp.entry(n() + 1 - a) + q_.entry(a));
  return out;
}

std::vector<long> KernelParams::psi_exponents_p_form() const {
  const Signature pp = p();
  std::vector<long> out;
  for (int a = 1; a < n(); ++a) out.push_back(-pp.entry(n() + 1 - a) - q_.entry(a + 1));
  return out;
}

MinorSpec default_minor(MinorKind kind, int n, int alpha) {
  const int z_count = kind == MinorKind::kPhi ? n + 1 - alpha : n - alpha;
  return MinorSpec{kind, n, alpha, iota_indices(z_count), iota_indices(alpha)};
}

namespace {

void subsets(int universe, int size, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= universe; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
}

}  // namespace

std::vector<MinorSpec> all_minors(int n) {
  std::vector<MinorSpec> out;
  for (auto kind : {MinorKind::kPhi, MinorKind::kPsi}) {
    const int top = kind == MinorKind::kPhi ? n : n - 1;
    for (int a = 1; a <= top; ++a) {
      const int z_count = kind == MinorKind::kPhi ? n + 1 - a : n - a;
      std::vector<std::vector<int>> zs;
      std::vector<std::vector<int>> us;
      subsets(n + 1, z_count, zs);
      subsets(n, a, us);
      for (const auto& i : zs)
        for (const auto& j : us) out.push_back(MinorSpec{kind, n, a, i, j});
    }
  }
  return out;
}

PolyMatrix kernel_z(int n) { return unitriangular(n + 1, VarKind::Z); }
PolyMatrix kernel_u(int n) { return unitriangular(n, VarKind::U); }

PolyMatrix build_u_ext(const PolyMatrix& u) { return hstack(u, PolyMatrix(u.rows(), 1)); }

MultiPoly minor_value(const MinorSpec& spec, const PolyMatrix& z, const PolyMatrix& u) {
  const int n = spec.n;
  if (n < 1 || z.rows() != static_cast<std::size_t>(n + 1) || u.rows() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("minor: matrix sizes do not match n");
  }
  const bool is_phi = spec.kind == MinorKind::kPhi;
  const int top = is_phi ? n : n - 1;
  if (spec.alpha < 1 || spec.alpha > top) throw std::invalid_argument("minor: level out of range");
  const int z_count = is_phi ? n + 1 - spec.alpha : n - spec.alpha;
  if (static_cast<int>(spec.z_rows.size()) != z_count || static_cast<int>(spec.u_rows.size()) != spec.alpha) {
    throw std::invalid_argument("minor: wrong number of rows");
  }
  for (int i : spec.z_rows)
    if (i < 1 || i > n + 1) throw std::invalid_argument("minor: Z row out of range");
  for (int j : spec.u_rows)
    if (j < 1 || j > n) throw std::invalid_argument("minor: U row out of range");
  if (is_phi) {
    const PolyMatrix top_rows = submatrix(z, spec.z_rows, iota_indices(n + 1));
    const PolyMatrix bottom = submatrix(build_u_ext(u), spec.u_rows, iota_indices(n + 1));
    return det(vstack(top_rows, bottom));
  }
  const PolyMatrix top_rows = submatrix(z, spec.z_rows, iota_indices(n));
  const PolyMatrix bottom = submatrix(u, spec.u_rows, iota_indices(n));
  return det(vstack(top_rows, bottom));
}

MultiPoly phi_minor(const MinorSpec& spec, const PolyMatrix& z, const PolyMatrix& u) {
  if (spec.kind != MinorKind::kPhi) throw std::invalid_argument("phi_minor needs a Phi spec");
  return minor_value(spec, z, u);
}

MultiPoly psi_minor(const MinorSpec& spec, const PolyMatrix& z, const PolyMatrix& u) {
  if (spec.kind != MinorKind::kPsi) throw std::invalid_argument("psi_minor needs a Psi spec");
  return minor_value(spec, z, u);
}

MultiPoly phi(int alpha, const PolyMatrix& z, const PolyMatrix& u) {
  const int n = static_cast<int>(u.rows());
  if (alpha < 1 || alpha > n) throw std::out_of_range("phi: alpha out of range");
  return minor_value(default_minor(MinorKind::kPhi, n, alpha), z, u);
}

MultiPoly psi(int alpha, const PolyMatrix& z, const PolyMatrix& u) {
  const int n = static_cast<int>(u.rows());
  if (alpha < 1 || alpha > n - 1) throw std::out_of_range("psi: alpha out of range");
  return minor_value(default_minor(MinorKind::kPsi, n, alpha), z, u);
}

std::optional<RImage> predicted_r_image(const MinorSpec& spec, VarKind kind, int k, int l) {
  if (l <= k) throw std::invalid_argument("R_kl needs k < l");
  const auto& rows = kind == VarKind::Z ? spec.z_rows : spec.u_rows;
  const auto pos_k = std::find(rows.begin(), rows.end(), k);
  if (pos_k == rows.end()) return std::nullopt;
  if (std::find(rows.begin(), rows.end(), l) != rows.end()) return std::nullopt;
  // theta = number of rows strictly between k and l, which is the number of
  // transpositions needed to move l into sorted position.
  int theta = 0;
  for (int i : rows)
    if (k < i && i < l) ++theta;
  std::vector<int> relabelled = rows;
  relabelled[static_cast<std::size_t>(pos_k - rows.begin())] = l;
  std::sort(relabelled.begin(), relabelled.end());
  RImage out{theta % 2 == 0 ? 1 : -1, spec};
  (kind == VarKind::Z ? out.minor.z_rows : out.minor.u_rows) = std::move(relabelled);
  return out;
}

MultiPoly apply_r(int n, VarKind kind, int k, int l, const MultiPoly& f) {
  return zhelobenko_op(kind == VarKind::Z ? n + 1 : n, k, l, kind).apply(f);
}

const KernelFactors& kernel_factors(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<KernelFactors>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto f = std::make_unique<KernelFactors>();
    f->n = n;
    const PolyMatrix z = kernel_z(n);
    const PolyMatrix u = kernel_u(n);
    f->phi.push_back(MultiPoly(1L));
    for (int a = 1; a <= n; ++a) f->phi.push_back(phi(a, z, u));
    f->psi.push_back(MultiPoly(1L));
    for (int a = 1; a < n; ++a) f->psi.push_back(psi(a, z, u));
    slot = std::move(f);
  }
  return *slot;
}

MultiPoly r_phi(int n, int k, int l, int alpha) {
  const auto& f = kernel_factors(n).phi.at(static_cast<std::size_t>(alpha));
  if (k == l) return f;
  return apply_r(n, VarKind::U, k, l, f);
}

MultiPoly r_psi(int n, int k, int l, int alpha) {
  const auto& f = kernel_factors(n).psi.at(static_cast<std::size_t>(alpha));
  if (k == l) return -f;
  return apply_r(n, VarKind::U, k, l, f);
}

KernelPoly build_kernel(const KernelParams& params) {
  const int n = params.n();
  const auto phi_e = params.phi_exponents();
  const auto psi_e = params.psi_exponents();
  if (phi_e != params.phi_exponents_p_form() || psi_e != params.psi_exponents_p_form()) {
    throw std::logic_error("p-form and r-form kernel exponents disagree");
  }
  const auto& factors = kernel_factors(n);
  MultiPoly value(1L);
  for (int a = 1; a <= n; ++a) {
    const long e = phi_e[static_cast<std::size_t>(a - 1)];
    if (e < 0) throw std::logic_error("negative kernel exponent");
    if (e > 0) value *= factors.phi[static_cast<std::size_t>(a)].pow(static_cast<unsigned>(e));
  }
  for (int a = 1; a < n; ++a) {
    const long e = psi_e[static_cast<std::size_t>(a - 1)];
    if (e < 0) throw std::logic_error("negative kernel exponent");
    if (e > 0) value *= factors.psi[static_cast<std::size_t>(a)].pow(static_cast<unsigned>(e));
  }
  return KernelPoly{params, std::move(value)};
}

bool check_zhelobenko_membership(const KernelPoly& kernel) {
  const int n = kernel.params.n();
  const Signature p = kernel.params.p();
  const Signature& q = kernel.params.q();
  for (int k = 1; k <= n; ++k) {
    const auto e = static_cast<unsigned>(p.entry(k) - p.entry(k + 1) + 1);
    if (!apply_power(zhelobenko_op(n + 1, k, k + 1, VarKind::Z), kernel.value, e).is_zero()) return false;
  }
  for (int k = 1; k < n; ++k) {
    const auto e = static_cast<unsigned>(q.entry(k) - q.entry(k + 1) + 1);
    if (!apply_power(zhelobenko_op(n, k, k + 1, VarKind::U), kernel.value, e).is_zero()) return false;
  }
  return true;
}

const char* to_string(PlueckerRelation relation) {
  switch (relation) {
    case PlueckerRelation::kPlu1:
      return "Plu1";
    case PlueckerRelation::kPlu2:
      return "Plu2";
    case PlueckerRelation::kPlu3:
      return "Plu3";
  }
  return "?";
}

bool pluecker_admissible(PlueckerRelation relation, int m, int alpha, int beta, int n) {
  // Every relation touches a level beta+1 <= n (Phi_(beta+1), Psi_beta or R_j(beta+1) in u).
  if (!(1 <= m && m < alpha && beta <= n - 1)) return false;
  if (relation == PlueckerRelation::kPlu1) return alpha <= beta;
  return alpha < beta;
}

std::vector<std::array<int, 3>> admissible_triples(PlueckerRelation relation, int n) {
  std::vector<std::array<int, 3>> out;
  for (int m = 1; m <= n; ++m)
    for (int a = m + 1; a <= n; ++a)
      for (int b = a; b <= n; ++b)
        if (pluecker_admissible(relation, m, a, b, n)) out.push_back({m, a, b});
  return out;
}

bool check_pluecker(PlueckerRelation relation, int m, int alpha, int beta, int n) {
  if (!pluecker_admissible(relation, m, alpha, beta, n)) throw std::invalid_argument("inadmissible Pluecker indices");
  const auto& f = kernel_factors(n);
  const auto a = static_cast<std::size_t>(alpha);
  const auto b = static_cast<std::size_t>(beta);
  MultiPoly lhs;
  MultiPoly rhs;
  switch (relation) {
    case PlueckerRelation::kPlu1:
      for (int j = alpha + 1; j <= beta + 1; ++j) lhs += r_phi(n, m, j, alpha) * r_psi(n, j, beta + 1, beta);
      rhs = -(f.phi[a] * r_psi(n, m, beta + 1, beta)) + f.phi[b + 1] * r_psi(n, m, alpha, alpha - 1);
      break;
    case PlueckerRelation::kPlu2:
      for (int j = alpha + 1; j <= beta + 1; ++j) lhs += r_psi(n, m, j, alpha) * r_psi(n, j, beta + 1, beta);
      rhs = -(f.psi[a] * r_psi(n, m, beta + 1, beta));
      break;
    case PlueckerRelation::kPlu3:
      for (int j = alpha + 1; j <= beta; ++j) lhs += r_phi(n, m, j, alpha) * r_phi(n, j, beta + 1, beta);
      rhs = -(f.phi[a] * r_phi(n, m, beta + 1, beta)) + r_phi(n, m, beta + 1, alpha) * f.phi[b];
      break;
  }
  return lhs == rhs;
}

bool check_kernel_invariance(const KernelParams& params, const PolyMatrix& g) {
  const int n = params.n();
  if (g.rows() != static_cast<std::size_t>(n) || !g.is_square()) throw std::invalid_argument("g must be n x n");
  PolyMatrix big = PolyMatrix::identity(static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) big(i, j) = g(i, j);
  const MultiPoly l = build_kernel(params).value;
  const RationalExpr z_side = act_rational(n + 1, params.p(), big, l, VarKind::Z);
  // The z-side denominator is free of u, so the u-action passes through it.
  const RationalExpr both = act_rational(n, params.q(), g, z_side.numer(), VarKind::U);
  return both.numer() == l * z_side.denom() * both.denom();
}

}  // namespace glr
