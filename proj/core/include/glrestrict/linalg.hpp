#pragma once

#include "glrestrict/poly.hpp"
#include "glrestrict/rational.hpp"

#include <cstddef>
#include <vector>

namespace glr {

using RationalVector = std::vector<Rational>;
using RationalRows = std::vector<RationalVector>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RationalRows& rows, std::size_t cols);

/// Basis of {x : A x = 0} for A with the given column count (rows may be empty).
RationalRows nullspace(RationalRows rows, std::size_t cols);

/// Rank of the family of vectors.
std::size_t rank(RationalRows rows, std::size_t cols);

/// Whether v is a rational linear combination of the basis vectors.
bool in_span(const RationalRows& basis, const RationalVector& v, std::size_t cols);

/// Polynomial version: coordinates are taken on the union of monomials.
bool in_span(const std::vector<MultiPoly>& basis, const MultiPoly& p);

/// Whether the polynomials are linearly independent over Q.
bool linearly_independent(const std::vector<MultiPoly>& polys);

}  // namespace glr
