#include "glrestrict/var.hpp"

#include <stdexcept>

namespace glr {

namespace {

std::uint8_t checked_index(int i) {
  if (i < 1 || i > 127) throw std::out_of_range("variable index out of range: " + std::to_string(i));
  return static_cast<std::uint8_t>(i);
}

}  // namespace

VarId VarId::of(VarKind kind, int row, int col) {
  if (kind == VarKind::T) return t(row);
  if (row >= col) throw std::invalid_argument("variable needs row < col");
  return VarId{kind, checked_index(row), checked_index(col)};
}

VarId VarId::z(int row, int col) { return of(VarKind::Z, row, col); }
VarId VarId::u(int row, int col) { return of(VarKind::U, row, col); }
VarId VarId::t(int slot) { return VarId{VarKind::T, checked_index(slot), 0}; }

std::string to_string(VarId v) {
  switch (v.kind) {
    case VarKind::Z:
      return "z[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
    case VarKind::U:
      return "u[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
    case VarKind::T:
      return v.row == 1 ? std::string("t") : "t[" + std::to_string(v.row) + "]";
  }
  return "?";
}

}  // namespace glr
