#include "glrestrict/linalg.hpp"

#include <map>
#include <utility>

namespace glr {

std::vector<std::size_t> rref(RationalRows& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = Rational(1) / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RationalRows nullspace(RationalRows rows, std::size_t cols) {
  const auto pivots = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  RationalRows basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(RationalRows rows, std::size_t cols) { return rref(rows, cols).size(); }

bool in_span(const RationalRows& basis, const RationalVector& v, std::size_t cols) {
  RationalRows with = basis;
  with.push_back(v);
  return rank(basis, cols) == rank(std::move(with), cols);
}

namespace {

RationalRows coordinates(const std::vector<MultiPoly>& polys, std::size_t& cols) {
  std::map<Monomial, std::size_t> index;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) index.emplace(m, 0);
  std::size_t k = 0;
  for (auto& [m, i] : index) i = k++;
  cols = index.size();
  RationalRows rows;
  for (const auto& p : polys) {
    RationalVector v(cols, Rational(0));
    for (const auto& [m, c] : p.terms()) v[index.at(m)] = c;
    rows.push_back(std::move(v));
  }
  return rows;
}

}  // namespace

bool in_span(const std::vector<MultiPoly>& basis, const MultiPoly& p) {
  if (p.is_zero()) return true;
  std::vector<MultiPoly> all = basis;
  all.push_back(p);
  std::size_t cols = 0;
  RationalRows rows = coordinates(all, cols);
  RationalVector v = rows.back();
  rows.pop_back();
  return in_span(rows, v, cols);
}

bool linearly_independent(const std::vector<MultiPoly>& polys) {
  std::size_t cols = 0;
  RationalRows rows = coordinates(polys, cols);
  return rank(std::move(rows), cols) == polys.size();
}

}  // namespace glr
