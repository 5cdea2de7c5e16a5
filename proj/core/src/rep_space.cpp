#include "glrestrict/rep_space.hpp"

#include "glrestrict/generators.hpp"
#include "glrestrict/linalg.hpp"

#include <map>
#include <stdexcept>

namespace glr {

int default_degree_bound(const Signature& p) {
  long total = 0;
  for (std::size_t j = 1; j <= p.size(); ++j) total += p.entry(j) - p.entry(p.size());
  return static_cast<int>(total);
}

std::vector<Monomial> monomials_up_to(int n, int bound, VarKind kind) {
  std::vector<VarId> vars;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) vars.push_back(VarId::of(kind, i, j));
  std::vector<Monomial> out;
  auto rec = [&](auto&& self, std::size_t idx, int budget, const Monomial& acc) -> void {
    if (idx == vars.size()) {
      out.push_back(acc);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      self(self, idx + 1, budget - e, e == 0 ? acc : acc * Monomial::of(vars[idx], static_cast<std::uint32_t>(e)));
    }
  };
  rec(rec, 0, bound, Monomial());
  return out;
}

bool satisfies_zhelobenko(int n, const Signature& p, const MultiPoly& f, VarKind kind) {
  for (int j = 1; j < n; ++j) {
    const auto e = static_cast<unsigned>(p.entry(static_cast<std::size_t>(j)) - p.entry(static_cast<std::size_t>(j + 1)) + 1);
    if (!apply_power(zhelobenko_op(n, j, j + 1, kind), f, e).is_zero()) return false;
  }
  return true;
}

RepSpace build_rep_space(int n, const Signature& p, std::optional<int> degree_bound, VarKind kind) {
  if (p.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("signature length does not match n");
  const int bound = degree_bound.value_or(default_degree_bound(p));
  if (bound < 0) throw std::invalid_argument("negative degree bound");

  // x_ab carries weight e_a - e_b and each R_j(j+1) shifts weight by a fixed
  // amount, so the conditions split into independent blocks per weight.
  std::map<std::vector<int>, std::vector<Monomial>> blocks;
  for (const auto& m : monomials_up_to(n, bound, kind)) {
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto f = m.factor(i);
      w[f.var.row - 1] += static_cast<int>(f.exponent);
      w[f.var.col - 1] -= static_cast<int>(f.exponent);
    }
    blocks[w].push_back(m);
  }

  std::vector<std::pair<DiffOp, unsigned>> conditions;
  for (int j = 1; j < n; ++j) {
    const auto e = static_cast<unsigned>(p.entry(static_cast<std::size_t>(j)) - p.entry(static_cast<std::size_t>(j + 1)) + 1);
    conditions.emplace_back(zhelobenko_op(n, j, j + 1, kind), e);
  }

  RepSpace space{p, n, kind, {}};
  for (const auto& [weight, monos] : blocks) {
    std::map<std::pair<std::size_t, Monomial>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> columns(monos.size());
    for (std::size_t c = 0; c < monos.size(); ++c) {
      const MultiPoly f = MultiPoly::term(monos[c], Rational(1));
      for (std::size_t k = 0; k < conditions.size(); ++k) {
        const MultiPoly image = apply_power(conditions[k].first, f, conditions[k].second);
        for (const auto& [m, coeff] : image.terms()) {
          auto [it, inserted] = row_of.try_emplace({k, m}, row_of.size());
          columns[c].emplace_back(it->second, coeff);
        }
      }
    }
    RationalRows rows(row_of.size(), RationalVector(monos.size(), Rational(0)));
    for (std::size_t c = 0; c < monos.size(); ++c)
      for (const auto& [r, coeff] : columns[c]) rows[r][c] = coeff;
    for (const auto& v : nullspace(std::move(rows), monos.size())) {
      MultiPoly f;
      for (std::size_t c = 0; c < monos.size(); ++c)
        if (v[c] != 0) f += MultiPoly::term(monos[c], v[c]);
      space.basis.push_back(std::move(f));
    }
  }

  const auto expected = count_gt_patterns(p);
  if (space.basis.size() != expected) {
    throw std::runtime_error("dimension of V" + p.to_string() + " is " + std::to_string(space.basis.size()) +
                             " but the Gelfand-Tsetlin count is " + std::to_string(expected));
  }
  return space;
}

}  // namespace glr
