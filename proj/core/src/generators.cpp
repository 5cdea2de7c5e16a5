#include "glrestrict/generators.hpp"

#include <stdexcept>
#include <string>

namespace glr {

namespace {

MultiPoly x(VarKind kind, int i, int j) { return MultiPoly::variable(VarId::of(kind, i, j)); }

DiffOp diagonal(int n, const Signature& p, int k, VarKind kind) {
  DiffOp op = DiffOp::multiplication(MultiPoly(p.entry(static_cast<std::size_t>(k))));
  for (int i = 1; i < k; ++i) op.add_derivative(VarId::of(kind, i, k), x(kind, i, k));
  for (int j = k + 1; j <= n; ++j) op.add_derivative(VarId::of(kind, k, j), -x(kind, k, j));
  return op;
}

DiffOp raising(int k, VarKind kind) {
  DiffOp op = DiffOp::derivative(VarId::of(kind, k, k + 1));
  for (int i = 1; i < k; ++i) op.add_derivative(VarId::of(kind, i, k + 1), x(kind, i, k));
  return op;
}

DiffOp lowering(int n, const Signature& p, int k, VarKind kind) {
  const auto uk = static_cast<std::size_t>(k);
  const MultiPoly head = x(kind, k, k + 1);
  DiffOp op = DiffOp::multiplication(MultiPoly(p.entry(uk) - p.entry(uk + 1)) * head);
  for (int i = 1; i < k; ++i) op.add_derivative(VarId::of(kind, i, k), x(kind, i, k + 1));
  for (int j = k + 1; j <= n; ++j) op.add_derivative(VarId::of(kind, k, j), -(head * x(kind, k, j)));
  for (int m = k + 2; m <= n; ++m) {
    op.add_derivative(VarId::of(kind, k + 1, m), head * x(kind, k + 1, m) - x(kind, k, m));
  }
  return op;
}

}  // namespace

DiffOp generator(int n, const Signature& p, int k, int l, VarKind kind, ChainOrder order) {
  if (p.size() != static_cast<std::size_t>(n)) throw std::out_of_range("signature length does not match n");
  if (k < 1 || k > n || l < 1 || l > n) {
    throw std::out_of_range("generator index (" + std::to_string(k) + "," + std::to_string(l) + ") out of range");
  }
  if (k == l) return diagonal(n, p, k, kind);
  if (l == k + 1) return raising(k, kind);
  if (k == l + 1) return lowering(n, p, l, kind);
  if (k < l) {
    if (order == ChainOrder::kLastStep) {
      return commutator(generator(n, p, k, l - 1, kind, order), generator(n, p, l - 1, l, kind, order));
    }
    return commutator(generator(n, p, k, k + 1, kind, order), generator(n, p, k + 1, l, kind, order));
  }
  if (order == ChainOrder::kLastStep) {
    return commutator(generator(n, p, k, l + 1, kind, order), generator(n, p, l + 1, l, kind, order));
  }
  return commutator(generator(n, p, k, k - 1, kind, order), generator(n, p, k - 1, l, kind, order));
}

DiffOp zhelobenko_op(int n, int k, int m, VarKind kind) {
  if (m <= k) throw std::invalid_argument("Zhelobenko operator needs m > k");
  if (k < 1 || m > n) throw std::out_of_range("Zhelobenko operator index out of range");
  DiffOp op = DiffOp::derivative(VarId::of(kind, k, m));
  for (int j = m + 1; j <= n; ++j) op.add_derivative(VarId::of(kind, k, j), x(kind, m, j));
  return op;
}

}  // namespace glr
