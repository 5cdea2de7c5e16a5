#pragma once

#include "glrestrict/matrix.hpp"
#include "glrestrict/poly.hpp"
#include "glrestrict/signature.hpp"

#include <array>
#include <optional>
#include <vector>

namespace glr {

/// Signatures r (length n+1) and q (length n) of an interlacing pair; p = r* is derived.
class KernelParams {
 public:
  /// Throws std::invalid_argument("non-interlacing signatures") unless r_j >= q_j >= r_(j+1).
  KernelParams(Signature r, Signature q);

  [[nodiscard]] int n() const { return static_cast<int>(q_.size()); }
  [[nodiscard]] const Signature& r() const { return r_; }
  [[nodiscard]] const Signature& q() const { return q_; }
  [[nodiscard]] Signature p() const { return r_.dual(); }

  /// Exponent of Phi_alpha, alpha = 1..n: q_alpha - r_(alpha+1).
  [[nodiscard]] std::vector<long> phi_exponents() const;
  /// Exponent of Psi_alpha, alpha = 1..n-1: r_(alpha+1) - q_(alpha+1).
  [[nodiscard]] std::vector<long> psi_exponents() const;
  /// The same exponents spelled through p: p_(n+1-alpha) + q_alpha and -p_(n+1-alpha) - q_(alpha+1).
  [[nodiscard]] std::vector<long> phi_exponents_p_form() const;
  [[nodiscard]] std::vector<long> psi_exponents_p_form() const;

 private:
  Signature r_;
  Signature q_;
};

enum class MinorKind { kPhi, kPsi };

/// Generalized minor Phi_alpha[I;J] or Psi_alpha[I;J].
///
/// z_rows index Z (Phi) or Z^cut (Psi), 1..n+1; u_rows index U^ext (Phi) or U (Psi), 1..n.
/// Rows may repeat, which makes the minor vanish.
struct MinorSpec {
  MinorKind kind = MinorKind::kPhi;
  int n = 1;
  int alpha = 1;
  std::vector<int> z_rows;
  std::vector<int> u_rows;

  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

/// Phi_alpha / Psi_alpha with the default rows 1..(n+1-alpha) or 1..(n-alpha) and 1..alpha.
MinorSpec default_minor(MinorKind kind, int n, int alpha);

/// Every minor with strictly increasing row sets at size n.
std::vector<MinorSpec> all_minors(int n);

/// Symbolic Z of size n+1 and U of size n.
PolyMatrix kernel_z(int n);
PolyMatrix kernel_u(int n);

/// U with a zero column appended.
PolyMatrix build_u_ext(const PolyMatrix& u);

/// det of (first n+1-alpha rows of Z) over (first alpha rows of U^ext); alpha in 1..n.
MultiPoly phi(int alpha, const PolyMatrix& z, const PolyMatrix& u);
/// det of (first n-alpha rows of Z^cut) over (first alpha rows of U); alpha in 1..n-1.
MultiPoly psi(int alpha, const PolyMatrix& z, const PolyMatrix& u);

/// Value of a generalized minor. Throws std::invalid_argument for a malformed spec.
MultiPoly minor_value(const MinorSpec& spec, const PolyMatrix& z, const PolyMatrix& u);
MultiPoly phi_minor(const MinorSpec& spec, const PolyMatrix& z, const PolyMatrix& u);
MultiPoly psi_minor(const MinorSpec& spec, const PolyMatrix& z, const PolyMatrix& u);

/// Predicted image of a minor under R_kl in z or u: nullopt for zero, otherwise
/// sign * minor with row k replaced by l and the rows re-sorted.
struct RImage {
  int sign = 1;
  MinorSpec minor;
};
std::optional<RImage> predicted_r_image(const MinorSpec& spec, VarKind kind, int k, int l);

/// Zhelobenko operator R_kl of the given kind applied to f (z has size n+1, u size n).
MultiPoly apply_r(int n, VarKind kind, int k, int l, const MultiPoly& f);

/// Symbolic Phi_alpha (alpha = 0..n) and Psi_alpha (alpha = 0..n-1) at size n, cached.
/// Phi_0 = det Z = 1 and Psi_0 = det Z^cut rows 1..n = 1.
struct KernelFactors {
  int n = 0;
  std::vector<MultiPoly> phi;
  std::vector<MultiPoly> psi;
};
const KernelFactors& kernel_factors(int n);

/// R^u_kl Phi_alpha, with R_kk Phi := +Phi.
MultiPoly r_phi(int n, int k, int l, int alpha);
/// R^u_kl Psi_alpha, with R_kk Psi := -Psi (so R_11 Psi_0 = -1).
MultiPoly r_psi(int n, int k, int l, int alpha);

struct KernelPoly {
  KernelParams params;
  MultiPoly value;
};

/// prod Phi_alpha^{q_alpha - r_(alpha+1)} prod Psi_alpha^{r_(alpha+1) - q_(alpha+1)}.
KernelPoly build_kernel(const KernelParams& params);

/// (R^z_k(k+1))^{p_k - p_(k+1) + 1} L = 0 for k <= n and (R^u_k(k+1))^{q_k - q_(k+1) + 1} L = 0 for k < n.
bool check_zhelobenko_membership(const KernelPoly& kernel);

enum class PlueckerRelation { kPlu1, kPlu2, kPlu3 };

const char* to_string(PlueckerRelation relation);

/// Index data (m, alpha, beta) for which the relation is stated at size n.
bool pluecker_admissible(PlueckerRelation relation, int m, int alpha, int beta, int n);
std::vector<std::array<int, 3>> admissible_triples(PlueckerRelation relation, int n);

/// Exact check of the quadratic relation. Throws std::invalid_argument for inadmissible indices.
bool check_pluecker(PlueckerRelation relation, int m, int alpha, int beta, int n);

/// (rho_p(diag(g,1)) (x) rho_q(g)) L == L exactly, for a constant n x n matrix g.
bool check_kernel_invariance(const KernelParams& params, const PolyMatrix& g);

}  // namespace glr
