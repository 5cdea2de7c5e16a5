#pragma once

#include "glrestrict/poly.hpp"
#include "glrestrict/signature.hpp"

#include <optional>
#include <vector>

namespace glr {

/// Explicit basis of the highest-weight space V_p inside polynomials in one variable kind.
struct RepSpace {
  Signature signature;
  int n = 0;
  VarKind kind = VarKind::Z;
  std::vector<MultiPoly> basis;

  [[nodiscard]] std::size_t dimension() const { return basis.size(); }
};

/// sum_j (p_j - p_n).
int default_degree_bound(const Signature& p);

/// Solves R_j(j+1)^{p_j - p_(j+1) + 1} f = 0 for all j over polynomials of degree <= bound.
/// Throws std::runtime_error when the dimension disagrees with the Gelfand-Tsetlin count.
RepSpace build_rep_space(int n, const Signature& p, std::optional<int> degree_bound = std::nullopt,
                         VarKind kind = VarKind::Z);

/// Whether f satisfies every Zhelobenko condition for signature p.
bool satisfies_zhelobenko(int n, const Signature& p, const MultiPoly& f, VarKind kind = VarKind::Z);

/// All monomials of total degree <= bound in the variables x_ij (1 <= i < j <= n).
std::vector<Monomial> monomials_up_to(int n, int bound, VarKind kind = VarKind::Z);

}  // namespace glr
