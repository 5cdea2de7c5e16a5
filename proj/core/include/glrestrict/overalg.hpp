#pragma once

#include "glrestrict/diff_op.hpp"
#include "glrestrict/kernel.hpp"
#include "glrestrict/poly.hpp"
#include "glrestrict/signature.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace glr {

/// Element of the direct sum over q interlacing r of V_q: a sparse map q -> polynomial.
///
/// Components may carry z variables as symbolic coefficients (kernel families).
class Family {
 public:
  explicit Family(Signature r) : r_(std::move(r)) {}

  [[nodiscard]] const Signature& r() const { return r_; }
  [[nodiscard]] int n() const { return static_cast<int>(r_.size()) - 1; }
  [[nodiscard]] const std::map<Signature, MultiPoly>& components() const { return components_; }
  /// Component at q; zero when absent.
  [[nodiscard]] const MultiPoly& at(const Signature& q) const;
  [[nodiscard]] bool is_zero() const { return components_.empty(); }

  /// Throws std::invalid_argument when q does not interlace r.
  void set(const Signature& q, MultiPoly value);
  void add(const Signature& q, const MultiPoly& value);

  Family& operator+=(const Family& o);
  Family& operator-=(const Family& o);
  Family& operator*=(const Rational& c);
  friend Family operator+(Family a, const Family& b) { return a += b; }
  friend Family operator-(Family a, const Family& b) { return a -= b; }
  friend Family operator*(const Rational& c, Family a) { return a *= c; }
  friend bool operator==(const Family& a, const Family& b) {
    return a.r_ == b.r_ && a.components_ == b.components_;
  }

 private:
  Signature r_;
  std::map<Signature, MultiPoly> components_;
};

using FamilyOperator = std::function<Family(const Family&)>;

/// F_kl of gl(n): on the q-component, the generator for signature q in u variables.
FamilyOperator f_generator_small(int n, const Signature& r, int k, int l);

/// Raising coefficient A_m(q, r). Throws std::domain_error on a zero denominator.
Rational coeff_A(int m, const Signature& q, const Signature& r);
/// Lowering coefficient B_m(q, r) = prod_{j<=m}(r_j - q_m + m - j)
///   / [prod_{a<m}(q_a - q_m + m - a) prod_{a>m}(q_m - q_a + a - m)].
Rational coeff_B(int m, const Signature& q, const Signature& r);

/// Chains I with first element `first`, last element `last` and strictly increasing interior.
std::vector<std::vector<int>> index_chains(int first, int last);

/// R_I = R_(i1 i2) R_(i2 i3) ... in u at size n, rightmost factor applied first.
MultiPoly composite_R(const std::vector<int>& chain, const MultiPoly& f, int n);

/// Readings of the printed formulas. kCalibrated is what holds; the others are
/// kept so the calibration can be replayed.
enum class RaiseReading {
  kCalibrated,         // factor (l - m + q_m - q_l), A_m at the output q
  kPrintedProduct,     // factor (l - m + q_l - q_m)
  kShiftedCoefficient  // A_m evaluated at q - e_m
};
enum class LowerReading {
  kCalibrated,     // chains I from m to n
  kChainsFromOne,  // chains I from 1 to m
};

/// Global signs in E L + s F L = 0, fixed at n = 1.
inline constexpr int kRaiseSign = 1;
inline constexpr int kLowerSign = 1;

/// F_1(n+1) = sum_m A_m (sum_{I from 1 to m} prod_{l in [1,m] \ I}(l - m + q_m - q_l) R_I) T_m^-.
FamilyOperator f_corner_raise(int n, const Signature& r, RaiseReading reading = RaiseReading::kCalibrated);
/// F_(n+1)n = sum_m B_m (sum_{I from m to n} prod_{l in [m,n] \ I}(q_m - q_l + l - m + 1) R_I) T_m^+.
FamilyOperator f_corner_lower(int n, const Signature& r, LowerReading reading = LowerReading::kCalibrated);

/// q -> L^r_q(Z, U) with symbolic Z.
Family kernel_family(int n, const Signature& r);

enum class Corner { kRaise, kLower };
const char* to_string(Corner corner);

/// E-side generator on the big group: E_1(n+1) or E_(n+1)n at size n+1 with p = r*.
DiffOp big_corner_generator(int n, const Signature& r, Corner corner);

struct IntertwiningReport {
  bool identity_holds = true;     // E L + s F L = 0 for every q
  bool closed_form_holds = true;  // E L matches the closed form for every q
  std::vector<Signature> failures;
  std::string detail;  // first nonzero difference, if any
  [[nodiscard]] bool passed() const { return identity_holds && closed_form_holds; }
};

IntertwiningReport verify_intertwining(int n, const Signature& r, Corner corner);

/// Variant without the closed-form cross-check, for replaying calibrations.
bool intertwining_identity(int n, const Signature& r, Corner corner, int sign, RaiseReading raise = RaiseReading::kCalibrated,
                           LowerReading lower = LowerReading::kCalibrated);

/// E L = closed form, after clearing the Phi (raise) or Psi (lower) denominators.
bool closed_form_agrees(const KernelParams& params, Corner corner);

struct StabilityReport {
  bool components_in_vq = true;   // every output component satisfies the Zhelobenko conditions of its q
  bool box_respected = true;      // no in-box output reads an out-of-box input with nonzero weight
  std::size_t spanning_families = 0;
  std::string detail;
  [[nodiscard]] bool passed() const { return components_in_vq && box_respected; }
};

StabilityReport verify_family_stability(int n, const Signature& r);

/// [F_kk, F_corner] == c F_corner on the kernel family, with c = delta_k1 (raise) or -delta_kn (lower).
bool weight_relation_holds(int n, const Signature& r, Corner corner, int k);

/// [F_(n+1)n, F_n(n-1)] L + E_(n+1)(n-1) L = 0 on the kernel family (n >= 2).
bool lower_commutator_spot_check(int n, const Signature& r);

/// Splits a kernel family by z-monomial into families of pure u-polynomials.
std::vector<Family> spanning_families(const Family& kernel);

}  // namespace glr
