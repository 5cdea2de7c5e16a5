#include "glrestrict/random.hpp"

#include "glrestrict/gauss.hpp"

namespace glr {

long RandomSource::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

Rational RandomSource::rational() {
  const long num = integer(-5, 5);
  const long den = integer(1, 4);
  return make_rational(num, den);
}

PolyMatrix RandomSource::gl_matrix(int n) {
  for (;;) {
    PolyMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) g(i, j) = MultiPoly(rational());
    bool ok = true;
    for (const auto& m : leading_minors(g)) ok = ok && !m.is_zero();
    if (ok) return g;
  }
}

MultiPoly RandomSource::poly(const std::vector<VarId>& vars, int terms, int max_degree) {
  MultiPoly out;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const long degree = integer(0, max_degree);
    for (long d = 0; d < degree && !vars.empty(); ++d) {
      m = m * Monomial::of(vars[static_cast<std::size_t>(integer(0, static_cast<long>(vars.size()) - 1))]);
    }
    out += MultiPoly::term(m, rational());
  }
  return out;
}

PolyMatrix RandomSource::poly_matrix(int n, const std::vector<VarId>& vars) {
  PolyMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m(i, j) = poly(vars, 2, 1);
  return m;
}

}  // namespace glr
