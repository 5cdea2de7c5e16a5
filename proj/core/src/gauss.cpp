#include "glrestrict/gauss.hpp"

#include <map>
#include <stdexcept>

namespace glr {

namespace {

std::vector<int> range_plus(int count, int extra) {
  std::vector<int> v = iota_indices(count);
  v.push_back(extra);
  return v;
}

[[noreturn]] void undefined() { throw std::domain_error("Gauss decomposition undefined"); }

MultiPoly eval_at(const MultiPoly& p, VarId v, long value) { return p.substitute({{v, MultiPoly(value)}}); }

}  // namespace

GaussFactors gauss_decompose(const ExprMatrix& g) {
  if (!g.is_square()) throw std::invalid_argument("Gauss decomposition of a non-square matrix");
  const int n = static_cast<int>(g.rows());
  std::vector<RationalExpr> minors(static_cast<std::size_t>(n) + 1, RationalExpr(1L));
  for (int j = 1; j <= n; ++j) {
    minors[static_cast<std::size_t>(j)] = det(corner(g, j, j));
    if (minors[static_cast<std::size_t>(j)].is_zero()) undefined();
  }
  GaussFactors out{ExprMatrix(g.rows(), g.cols()), ExprMatrix::identity(g.rows())};
  for (int j = 1; j <= n; ++j) {
    for (int i = j; i <= n; ++i) {
      // b_ij = det g[1..j-1, i ; 1..j] / det [g]_(j-1)(j-1)
      out.lower(i, j) = det(submatrix(g, range_plus(j - 1, i), iota_indices(j))) / minors[static_cast<std::size_t>(j - 1)];
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      // z_ij = det g[1..i ; 1..i-1, j] / det [g]_ii
      out.unipotent(i, j) = det(submatrix(g, iota_indices(i), range_plus(i - 1, j))) / minors[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

std::vector<MultiPoly> leading_minors(const PolyMatrix& m) {
  std::vector<MultiPoly> out;
  for (std::size_t j = 1; j <= m.rows(); ++j) out.push_back(det(corner(m, static_cast<int>(j), static_cast<int>(j))));
  return out;
}

ExprMatrix transformed(const PolyMatrix& z, const PolyMatrix& g) {
  const PolyMatrix zg = matmul(z, g);
  const int n = static_cast<int>(zg.rows());
  const auto minors = leading_minors(zg);
  ExprMatrix out = ExprMatrix::identity(zg.rows());
  for (int i = 1; i <= n; ++i) {
    const auto& m = minors[static_cast<std::size_t>(i - 1)];
    if (m.is_zero()) undefined();
    for (int j = i + 1; j <= n; ++j) out(i, j) = RationalExpr(det(submatrix(zg, iota_indices(i), range_plus(i - 1, j))), m);
  }
  return out;
}

RationalExpr act_rational(int n, const Signature& p, const PolyMatrix& g, const MultiPoly& f, VarKind kind) {
  if (p.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("signature length does not match n");
  const PolyMatrix z = unitriangular(n, kind);
  const PolyMatrix zg = matmul(z, g);
  const auto minors = leading_minors(zg);
  std::map<VarId, RationalExpr> bindings;
  for (int i = 1; i <= n; ++i) {
    const auto& m = minors[static_cast<std::size_t>(i - 1)];
    if (m.is_zero()) undefined();
    for (int j = i + 1; j <= n; ++j) {
      bindings.emplace(VarId::of(kind, i, j),
                       RationalExpr(det(submatrix(zg, iota_indices(i), range_plus(i - 1, j))), m));
    }
  }
  RationalExpr out = substitute(f, bindings);
  // prod_j b_jj^{p_j} = prod_j M_j^{p_j - p_(j+1)} with p_(n+1) = 0.
  MultiPoly numer_factor(1L);
  MultiPoly denom_factor(1L);
  for (int j = 1; j <= n; ++j) {
    const long next = j < n ? p.entry(static_cast<std::size_t>(j + 1)) : 0;
    const long e = p.entry(static_cast<std::size_t>(j)) - next;
    if (e == 0) continue;
    const auto& m = minors[static_cast<std::size_t>(j - 1)];
    if (e > 0) {
      numer_factor *= m.pow(static_cast<unsigned>(e));
    } else {
      denom_factor *= m.pow(static_cast<unsigned>(-e));
    }
  }
  return out * RationalExpr(numer_factor, denom_factor);
}

MultiPoly group_action(int n, const Signature& p, const PolyMatrix& g, const MultiPoly& f, VarKind kind) {
  auto value = act_rational(n, p, g, f, kind).to_polynomial();
  if (!value) throw std::runtime_error("group action did not clear denominators");
  return *value;
}

PolyMatrix one_param_element(int n, OneParamKind kind, int k, int l) {
  PolyMatrix g = PolyMatrix::identity(static_cast<std::size_t>(n));
  const MultiPoly t = MultiPoly::variable(kParamT);
  switch (kind) {
    case OneParamKind::kUpper:
      if (!(1 <= k && k < l && l <= n)) throw std::out_of_range("upper subgroup needs k < l <= n");
      g(k, l) = t;
      break;
    case OneParamKind::kDiagonal:
      if (k < 1 || k > n) throw std::out_of_range("diagonal subgroup index out of range");
      g(k, k) = MultiPoly::variable(kParamLambda);
      break;
    case OneParamKind::kLowerAdjacent:
      if (k < 1 || k >= n) throw std::out_of_range("lower subgroup index out of range");
      g(k + 1, k) = t;
      break;
    case OneParamKind::kCorner:
      if (n < 2) throw std::out_of_range("corner subgroup needs n >= 2");
      g(1, n) = t;
      break;
  }
  return g;
}

ExprMatrix one_param_transform(int n, OneParamKind kind, int k, int l, const PolyMatrix& z) {
  ExprMatrix out = to_expr(z);
  const MultiPoly t = MultiPoly::variable(kParamT);
  switch (kind) {
    case OneParamKind::kUpper:
      if (!(1 <= k && k < l && l <= n)) throw std::out_of_range("upper subgroup needs k < l <= n");
      out(k, l) = z(k, l) + t;
      for (int m = 1; m < k; ++m) out(m, l) = z(m, l) + t * z(m, k);
      break;
    case OneParamKind::kDiagonal: {
      if (k < 1 || k > n) throw std::out_of_range("diagonal subgroup index out of range");
      const MultiPoly lambda = MultiPoly::variable(kParamLambda);
      for (int j = k + 1; j <= n; ++j) out(k, j) = RationalExpr(z(k, j), lambda);
      for (int i = 1; i < k; ++i) out(i, k) = lambda * z(i, k);
      break;
    }
    case OneParamKind::kLowerAdjacent: {
      if (k < 1 || k >= n) throw std::out_of_range("lower subgroup index out of range");
      const MultiPoly den = MultiPoly(1L) + t * z(k, k + 1);
      for (int i = 1; i < k; ++i) out(i, k) = z(i, k) + t * z(i, k + 1);
      for (int j = k + 1; j <= n; ++j) out(k, j) = RationalExpr(z(k, j), den);
      for (int m = k + 2; m <= n; ++m) out(k + 1, m) = z(k + 1, m) + t * (z(k, k + 1) * z(k + 1, m) - z(k, m));
      break;
    }
    case OneParamKind::kCorner:
      if (n < 2) throw std::out_of_range("corner subgroup needs n >= 2");
      out(1, n) = z(1, n) + t;
      break;
  }
  return out;
}

VarId one_param_variable(OneParamKind kind) { return kind == OneParamKind::kDiagonal ? kParamLambda : kParamT; }

long one_param_base_point(OneParamKind kind) { return kind == OneParamKind::kDiagonal ? 1 : 0; }

std::pair<int, int> one_param_generator_index(int n, OneParamKind kind, int k, int l) {
  switch (kind) {
    case OneParamKind::kUpper:
      return {k, l};
    case OneParamKind::kDiagonal:
      return {k, k};
    case OneParamKind::kLowerAdjacent:
      return {k + 1, k};
    case OneParamKind::kCorner:
      return {1, n};
  }
  return {0, 0};
}

MultiPoly infinitesimal_action(int n, const Signature& p, OneParamKind kind, int k, int l, const MultiPoly& f,
                               VarKind var_kind) {
  const RationalExpr value = act_rational(n, p, one_param_element(n, kind, k, l), f, var_kind);
  const VarId v = one_param_variable(kind);
  const long a = one_param_base_point(kind);
  const MultiPoly n0 = eval_at(value.numer(), v, a);
  const MultiPoly n1 = eval_at(value.numer().partial(v), v, a);
  const MultiPoly d0 = eval_at(value.denom(), v, a);
  const MultiPoly d1 = eval_at(value.denom().partial(v), v, a);
  auto q = exact_divide(n1 * d0 - n0 * d1, d0 * d0);
  if (!q) throw std::runtime_error("infinitesimal action is not polynomial");
  return *q;
}

RationalExpr cocycle(const ExprMatrix& z, const PolyMatrix& g) {
  const ExprMatrix zg = matmul(z, to_expr(g));
  const int n = static_cast<int>(zg.rows());
  RationalExpr out(1L);
  for (int j = 1; j < n; ++j) {
    const RationalExpr m = det(corner(zg, j, j));
    if (m.is_zero()) undefined();
    out *= m.pow(-2);
  }
  return out;
}

bool jacobian_chain_check(int n, const PolyMatrix& z, const PolyMatrix& g, const PolyMatrix& h) {
  if (z.rows() != static_cast<std::size_t>(n)) throw std::invalid_argument("matrix size does not match n");
  const ExprMatrix ze = to_expr(z);
  const RationalExpr lhs = cocycle(ze, matmul(g, h));
  const RationalExpr rhs = cocycle(ze, g) * cocycle(transformed(z, g), h);
  return lhs == rhs;
}

}  // namespace glr
