#include "glrestrict/matrix.hpp"

#include <utility>

namespace glr {

namespace {

// Laplace expansion along the first row of the rows/cols subset.
MultiPoly cofactor_det(const PolyMatrix& m, std::size_t row, std::vector<std::size_t>& cols) {
  if (cols.size() == 1) return m(row, cols[0]);
  if (cols.size() == 2) return m(row, cols[0]) * m(row + 1, cols[1]) - m(row, cols[1]) * m(row + 1, cols[0]);
  MultiPoly out;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const MultiPoly& entry = m(row, cols[k]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (c != k) rest.push_back(cols[c]);
    MultiPoly minor = cofactor_det(m, row + 1, rest);
    if (minor.is_zero()) continue;
    if (k % 2 == 0) {
      out += entry * minor;
    } else {
      out -= entry * minor;
    }
  }
  return out;
}

MultiPoly bareiss_det(PolyMatrix a) {
  const std::size_t n = a.rows();
  MultiPoly prev(1L);
  bool negate = false;
  for (std::size_t k = 1; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = 0;
      for (std::size_t i = k + 1; i <= n && swap == 0; ++i)
        if (!a(i, k).is_zero()) swap = i;
      if (swap == 0) return MultiPoly();
      for (std::size_t j = 1; j <= n; ++j) std::swap(a(k, j), a(swap, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i <= n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        MultiPoly v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        auto q = exact_divide(v, prev);
        if (!q) throw std::logic_error("Bareiss step left a remainder");
        a(i, j) = std::move(*q);
      }
    }
    prev = a(k, k);
  }
  return negate ? -a(n, n) : a(n, n);
}

}  // namespace

MultiPoly det(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return MultiPoly(1L);
  if (m.rows() <= 4) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 1; j <= m.cols(); ++j) cols.push_back(j);
    return cofactor_det(m, 1, cols);
  }
  return bareiss_det(m);
}

RationalExpr det(const ExprMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  PolyMatrix cleared(m.rows(), m.cols());
  MultiPoly denom(1L);
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    std::vector<MultiPoly> dens;
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      const auto& d = m(i, j).denom();
      if (d.is_constant()) continue;
      bool seen = false;
      for (const auto& e : dens) seen = seen || e == d;
      if (!seen) dens.push_back(d);
    }
    MultiPoly row_den(1L);
    for (const auto& d : dens) row_den *= d;
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      MultiPoly scale(1L);
      for (const auto& d : dens)
        if (!(d == m(i, j).denom())) scale *= d;
      cleared(i, j) = m(i, j).numer() * scale;
    }
    denom *= row_den;
  }
  return RationalExpr(det(cleared), denom);
}

PolyMatrix unitriangular(int n, VarKind kind) {
  PolyMatrix z = PolyMatrix::identity(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) z(i, j) = MultiPoly::variable(VarId::of(kind, i, j));
  return z;
}

}  // namespace glr
