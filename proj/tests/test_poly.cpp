#include "support.hpp"

#include "glrestrict/random.hpp"
#include "glrestrict/rational_expr.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

namespace glr {
namespace {

using test::q;
using test::t;
using test::u;
using test::z;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(make_rational(2, 4), make_rational(1, 2));
  EXPECT_EQ(make_rational(3, -6), make_rational(-1, 2));
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(VarId, CodeRoundTrip) {
  for (VarId v : {VarId::z(1, 2), VarId::u(3, 4), kParamT, kParamLambda}) EXPECT_EQ(VarId::from_code(v.code()), v);
  EXPECT_LT(VarId::z(1, 2), VarId::z(1, 3));
  EXPECT_LT(VarId::z(4, 5), VarId::u(1, 2));
  EXPECT_EQ(to_string(VarId::z(1, 2)), "z[1,2]");
}

TEST(MultiPoly, AdditionExamples) {
  EXPECT_TRUE((z(1, 2) + (-z(1, 2))).is_zero());
  EXPECT_EQ((MultiPoly(1L) + z(1, 2)).to_string(), "1 + z[1,2]");
  EXPECT_EQ(z(1, 2) * u(1, 2) * q(2, 3) + z(1, 2) * u(1, 2) * q(1, 3), z(1, 2) * u(1, 2));
}

TEST(MultiPoly, MultiplicationExamples) {
  EXPECT_EQ((1 + z(1, 2)) * (1 - z(1, 2)), 1 - z(1, 2).pow(2));
  EXPECT_TRUE((z(1, 2) * MultiPoly()).is_zero());
  EXPECT_EQ((z(1, 2) * z(1, 3)).size(), 1u);
  EXPECT_EQ((z(1, 2) * z(1, 3)).degree(), 2u);
}

TEST(MultiPoly, PartialExamples) {
  EXPECT_EQ(z(1, 2).pow(2).partial(VarId::z(1, 2)), 2 * z(1, 2));
  EXPECT_TRUE(u(1, 2).partial(VarId::z(1, 2)).is_zero());
  EXPECT_EQ((z(1, 2) * z(1, 3)).partial(VarId::z(1, 2)), z(1, 3));
}

TEST(MultiPoly, TextFormat) {
  const MultiPoly p = q(-3, 2) * z(1, 2).pow(2) * u(2, 3) + 4 * t() - 1;
  EXPECT_EQ(p.to_string(), "-1 + 4 * t - 3/2 * z[1,2]^2 * u[2,3]");
  EXPECT_EQ(MultiPoly().to_string(), "0");
}

TEST(MultiPoly, ExactDivide) {
  const MultiPoly a = 1 + z(1, 2) * u(1, 2);
  const MultiPoly b = z(2, 3) - 3;
  EXPECT_EQ(exact_divide(a * b, b), a);
  EXPECT_FALSE(exact_divide(a * b + 1, b).has_value());
}

TEST(MultiPoly, SubstituteComposesWithEvaluation) {
  const MultiPoly p = z(1, 2).pow(2) * z(1, 3) - z(2, 3);
  const MultiPoly s = p.substitute({{VarId::z(1, 2), z(1, 2) + t()}, {VarId::z(2, 3), MultiPoly(q(1, 2))}});
  EXPECT_EQ(s, (z(1, 2) + t()).pow(2) * z(1, 3) - q(1, 2));
}

TEST(RationalExpr, SubstitutionExamples) {
  EXPECT_EQ(substitute(z(1, 2), {{VarId::z(1, 2), RationalExpr(q(3, 2))}}), RationalExpr(q(3, 2)));
  EXPECT_EQ(substitute(z(1, 2), {{VarId::z(1, 2), RationalExpr(z(1, 2) + t())}}), RationalExpr(z(1, 2) + t()));
  const RationalExpr img(z(2, 3), 1 + t() * z(2, 3));
  const RationalExpr out = substitute(z(2, 3), {{VarId::z(2, 3), img}});
  EXPECT_EQ(out, img);
  EXPECT_FALSE(out.to_polynomial().has_value());
  EXPECT_THROW(RationalExpr(z(1, 2), MultiPoly()), std::domain_error);
}

TEST(RationalExpr, FieldIdentities) {
  const RationalExpr a(1 + z(1, 2), z(1, 3) - 2);
  const RationalExpr b(u(1, 2), 1 + t());
  EXPECT_EQ(a / a, RationalExpr(1));
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ(a * b / b, a);
  EXPECT_EQ(a.pow(-2) * a.pow(2), RationalExpr(1));
  EXPECT_EQ(RationalExpr(2 * z(1, 2), MultiPoly(4L)).to_polynomial(), q(1, 2) * z(1, 2));
}

// Ring axioms on seeded random polynomials.
TEST(MultiPolyProperty, RingAxioms) {
  RandomSource rng(20240611);
  const std::vector<VarId> vars{VarId::z(1, 2), VarId::z(1, 3), VarId::z(2, 3), VarId::u(1, 2), kParamT};
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly a = rng.poly(vars, 4, 3);
    const MultiPoly b = rng.poly(vars, 4, 3);
    const MultiPoly c = rng.poly(vars, 3, 2);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a.pow(3), a * a * a);
    // Leibniz rule for each variable.
    for (VarId v : vars) ASSERT_EQ((a * b).partial(v), a.partial(v) * b + a * b.partial(v));
    if (!b.is_zero()) {
      ASSERT_EQ(exact_divide(a * b, b), a);
    }
  }
}

TEST(MultiPolyProperty, CanonicalOrderIsGradedLex) {
  RandomSource rng(99);
  const std::vector<VarId> vars{VarId::z(1, 2), VarId::z(2, 3), VarId::u(1, 2)};
  for (int trial = 0; trial < 50; ++trial) {
    const MultiPoly p = rng.poly(vars, 6, 4);
    std::uint32_t last = 0;
    for (const auto& [m, c] : p.terms()) {
      ASSERT_GE(m.degree(), last);
      ASSERT_NE(c, 0);
      last = m.degree();
    }
  }
}

}  // namespace
}  // namespace glr
