#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace glr {

// Z: coordinates z_ij of the big unipotent group, U: coordinates u_kl of the
// small one, T: formal parameters (t of a one-parameter subgroup, lambda of a
// diagonal subgroup).
enum class VarKind : std::uint8_t { Z = 0, U = 1, T = 2 };

/// Identity of a polynomial variable: (kind, row, col).
///
/// For Z and U, 1 <= row < col. For T, `row` is the parameter slot and col is 0.
struct VarId {
  VarKind kind = VarKind::Z;
  std::uint8_t row = 0;
  std::uint8_t col = 0;

  static VarId z(int row, int col);
  static VarId u(int row, int col);
  static VarId t(int slot = 1);
  static VarId of(VarKind kind, int row, int col);

  /// Dense 16-bit code; ordering of codes equals ordering of (kind, row, col).
  [[nodiscard]] constexpr std::uint16_t code() const {
    return static_cast<std::uint16_t>((static_cast<unsigned>(kind) << 14) | (unsigned(row) << 7) | unsigned(col));
  }
  static constexpr VarId from_code(std::uint16_t c) {
    return VarId{static_cast<VarKind>(c >> 14), static_cast<std::uint8_t>((c >> 7) & 0x7f),
                 static_cast<std::uint8_t>(c & 0x7f)};
  }

  friend constexpr auto operator<=>(const VarId& a, const VarId& b) { return a.code() <=> b.code(); }
  friend constexpr bool operator==(const VarId& a, const VarId& b) { return a.code() == b.code(); }
};

/// Formal parameter used for one-parameter subgroups exp(tX).
inline const VarId kParamT = VarId{VarKind::T, 1, 0};
/// Algebraic stand-in for e^t on diagonal subgroups.
inline const VarId kParamLambda = VarId{VarKind::T, 2, 0};

/// `z[i,j]`, `u[k,l]`, `t`, `t[2]`.
std::string to_string(VarId v);

}  // namespace glr
