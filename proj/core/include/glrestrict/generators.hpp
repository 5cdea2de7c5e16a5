#pragma once

#include "glrestrict/diff_op.hpp"
#include "glrestrict/signature.hpp"

namespace glr {

/// Which adjacent step is split off when E_kl (|k-l| >= 2) is built by commutators.
enum class ChainOrder {
  kLastStep,   // E_kl = [E_k(l-1), E_(l-1)l] for k<l, [E_k(l+1), E_(l+1)l] for k>l
  kFirstStep,  // E_kl = [E_k(k+1), E_(k+1)l] for k<l, [E_k(k-1), E_(k-1)l] for k>l
};

/// Generator E_kl of gl(n) acting on V_p, as an operator in variables of the given kind.
///
/// E_kk, E_k(k+1) and E_(k+1)k are explicit; the rest are iterated commutators.
/// Throws std::out_of_range for indices outside 1..n or a signature of the wrong length.
DiffOp generator(int n, const Signature& p, int k, int l, VarKind kind = VarKind::Z,
                 ChainOrder order = ChainOrder::kLastStep);

/// Zhelobenko operator R_km = d_km + sum_{j>m} x_mj d_kj. Throws when m <= k.
DiffOp zhelobenko_op(int n, int k, int m, VarKind kind = VarKind::Z);

}  // namespace glr
