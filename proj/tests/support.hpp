#pragma once

#include "glrestrict/matrix.hpp"
#include "glrestrict/poly.hpp"
#include "glrestrict/rational.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <vector>

namespace glr {

// Readable gtest diagnostics.
inline void PrintTo(const MultiPoly& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace glr

namespace glr::test {

inline MultiPoly z(int i, int j) { return MultiPoly::variable(VarId::z(i, j)); }
inline MultiPoly u(int i, int j) { return MultiPoly::variable(VarId::u(i, j)); }
inline MultiPoly t() { return MultiPoly::variable(kParamT); }
inline Rational q(long num, long den = 1) { return make_rational(num, den); }

/// Leibniz formula over all permutations; an oracle independent of the library determinant.
inline MultiPoly permutation_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  MultiPoly total;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    MultiPoly term(1L);
    for (std::size_t i = 0; i < n; ++i) term *= m(i + 1, perm[i]);
    if (inversions % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace glr::test
