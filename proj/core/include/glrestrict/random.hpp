#pragma once

#include "glrestrict/matrix.hpp"
#include "glrestrict/rational.hpp"

#include <cstdint>
#include <random>

namespace glr {

/// Seeded source of small random rationals and matrices for property checks.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// num/den with num in [-5, 5] and den in [1, 4].
  Rational rational();
  long integer(long lo, long hi);

  /// Constant n x n matrix whose leading principal minors are all nonzero.
  PolyMatrix gl_matrix(int n);
  /// Square matrix of random polynomials of degree <= 1 in the given variables.
  PolyMatrix poly_matrix(int n, const std::vector<VarId>& vars);
  /// Random polynomial with up to `terms` terms of degree <= max_degree.
  MultiPoly poly(const std::vector<VarId>& vars, int terms, int max_degree);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace glr
