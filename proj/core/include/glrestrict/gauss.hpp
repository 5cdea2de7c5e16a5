#pragma once

#include "glrestrict/matrix.hpp"
#include "glrestrict/rational_expr.hpp"
#include "glrestrict/signature.hpp"

#include <vector>

namespace glr {

/// g = lower * unipotent with lower triangular and upper unitriangular factors.
struct GaussFactors {
  ExprMatrix lower;
  ExprMatrix unipotent;
};

/// Determinantal formulas for both factors.
/// Throws std::domain_error("Gauss decomposition undefined") when a leading minor vanishes.
GaussFactors gauss_decompose(const ExprMatrix& g);

/// det [m]_jj for j = 1..rows.
std::vector<MultiPoly> leading_minors(const PolyMatrix& m);

/// Z^[g] from the Gauss decomposition Zg = b(Z,g) Z^[g]; row i has denominator det [Zg]_ii.
ExprMatrix transformed(const PolyMatrix& z, const PolyMatrix& g);

/// rho_p(g) f = f(Z^[g]) prod_j b_jj(Z,g)^{p_j} as a rational expression in the variables of `kind`.
RationalExpr act_rational(int n, const Signature& p, const PolyMatrix& g, const MultiPoly& f, VarKind kind = VarKind::Z);

/// Same, after mandatory cancellation. Throws std::runtime_error when the result is not a polynomial.
MultiPoly group_action(int n, const Signature& p, const PolyMatrix& g, const MultiPoly& f, VarKind kind = VarKind::Z);

enum class OneParamKind {
  kUpper,          // exp(t E_kl), k < l
  kDiagonal,       // exp(t E_kk), with lambda standing for e^t
  kLowerAdjacent,  // exp(t E_(k+1)k)
  kCorner,         // exp(t E_1n)
};

/// g(t) as a polynomial matrix in t (or lambda for the diagonal kind).
PolyMatrix one_param_element(int n, OneParamKind kind, int k, int l = 0);

/// Closed form of Z^[g(t)]; `l` is used by the upper kind only.
ExprMatrix one_param_transform(int n, OneParamKind kind, int k, int l, const PolyMatrix& z);

/// Parameter variable and the value at which the subgroup passes through the identity.
VarId one_param_variable(OneParamKind kind);
long one_param_base_point(OneParamKind kind);

/// Generator index pair (row, col) whose exponential the subgroup is.
std::pair<int, int> one_param_generator_index(int n, OneParamKind kind, int k, int l);

/// d/dt at the identity of rho_p(g(t)) f.
MultiPoly infinitesimal_action(int n, const Signature& p, OneParamKind kind, int k, int l, const MultiPoly& f,
                               VarKind var_kind = VarKind::Z);

/// Candidate cocycle c(Z,g) = prod_{j<n} det([Zg]_jj)^{-2}.
RationalExpr cocycle(const ExprMatrix& z, const PolyMatrix& g);

/// c(Z,gh) == c(Z,g) c(Z^[g],h), exactly.
bool jacobian_chain_check(int n, const PolyMatrix& z, const PolyMatrix& g, const PolyMatrix& h);

}  // namespace glr
