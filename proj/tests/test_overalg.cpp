#include "support.hpp"

#include "glrestrict/kernel.hpp"
#include "glrestrict/overalg.hpp"

#include <gtest/gtest.h>

namespace glr {
namespace {

using test::q;
using test::u;
using test::z;

TEST(Family, SparseComponents) {
  Family f(Signature({2, 1, 0}));
  EXPECT_TRUE(f.at(Signature({1, 0})).is_zero());
  f.set(Signature({1, 0}), u(1, 2));
  f.set(Signature({2, 1}), MultiPoly());
  EXPECT_EQ(f.components().size(), 1u);
  EXPECT_THROW(f.set(Signature({3, 0}), 1), std::invalid_argument);
  Family g = f + f;
  EXPECT_EQ(g.at(Signature({1, 0})), 2 * u(1, 2));
  EXPECT_TRUE((g - q(2) * f).is_zero());
}

TEST(SmallGenerators, Examples) {
  const Signature r({3, 1, 0});
  const Signature qq({2, 1});
  Family one(r);
  one.set(qq, 1);
  for (int k = 1; k <= 2; ++k) EXPECT_EQ(f_generator_small(2, r, k, k)(one).at(qq), MultiPoly(qq.entry(k)));
  EXPECT_TRUE(f_generator_small(2, r, 1, 2)(one).is_zero());
  EXPECT_EQ(f_generator_small(2, r, 2, 1)(one).at(qq), (qq.entry(1) - qq.entry(2)) * u(1, 2));
}

TEST(Coefficients, Examples) {
  for (const auto& r : signatures_in_box(2, 0, 3))
    for (const auto& qq : enumerate_interlacing(r)) EXPECT_EQ(coeff_A(1, qq, r), Rational(qq.entry(1) - r.entry(2)));
  // Bottom wall q_m = r_(m+1) kills A_m; top wall q_m = r_m kills B_m.
  const Signature r({4, 2, 1, 0});
  EXPECT_EQ(coeff_A(2, Signature({3, 1, 0}), r), 0);
  EXPECT_EQ(coeff_B(2, Signature({3, 2, 0}), r), 0);
  EXPECT_NE(coeff_A(2, Signature({3, 2, 0}), r), 0);
  EXPECT_NE(coeff_B(2, Signature({3, 1, 0}), r), 0);
}

TEST(CoefficientsProperty, TranslationCovariantAndSigned) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& r : signatures_in_box(n + 1, 0, 3))
      for (const auto& qq : enumerate_interlacing(r)) {
        std::vector<long> rs = r.entries();
        std::vector<long> qs = qq.entries();
        for (auto& x : rs) x += 5;
        for (auto& x : qs) x += 5;
        for (int m = 1; m <= n; ++m) {
          ASSERT_EQ(coeff_A(m, qq, r), coeff_A(m, Signature(qs), Signature(rs)));
          ASSERT_EQ(coeff_B(m, qq, r), coeff_B(m, Signature(qs), Signature(rs)));
        }
      }
}

TEST(Chains, CompositeR) {
  const MultiPoly f = u(1, 2) * u(2, 3) + u(1, 3);
  EXPECT_EQ(index_chains(1, 1), (std::vector<std::vector<int>>{{1}}));
  EXPECT_EQ(index_chains(1, 3), (std::vector<std::vector<int>>{{1, 2, 3}, {1, 3}}));
  EXPECT_EQ(composite_R({1}, f, 3), f);
  EXPECT_EQ(composite_R({1, 2}, f, 3), apply_r(3, VarKind::U, 1, 2, f));
  const MultiPoly g = u(1, 2) * u(2, 3);
  EXPECT_EQ(composite_R({1, 2, 3}, g, 3), apply_r(3, VarKind::U, 1, 2, apply_r(3, VarKind::U, 2, 3, g)));
  EXPECT_EQ(index_chains(2, 5).size(), 4u);
}

TEST(KernelFamily, Examples) {
  const Family trivial = kernel_family(2, Signature({0, 0, 0}));
  ASSERT_EQ(trivial.components().size(), 1u);
  EXPECT_EQ(trivial.at(Signature({0, 0})), MultiPoly(1L));

  const Family f = kernel_family(1, Signature({1, 0}));
  EXPECT_EQ(f.at(Signature({1})), -z(1, 2));
  EXPECT_EQ(f.at(Signature({0})), MultiPoly(1L));
}

// At n = 1, r = (1,0): d/dz_12 L is -1 at q = (1) and 0 at q = (0), so F L is +1 at q = (1).
TEST(CornerRaise, HandCheckedAtRankOne) {
  const Signature r({1, 0});
  const Family image = f_corner_raise(1, r)(kernel_family(1, r));
  Family expected(r);
  expected.set(Signature({1}), 1);
  EXPECT_EQ(image, expected);
}

TEST(Intertwining, ExhaustiveSmallRanks) {
  for (int n = 1; n <= 2; ++n)
    for (const auto& r : signatures_in_box(n + 1, 0, 3))
      for (Corner c : {Corner::kRaise, Corner::kLower}) {
        const auto rep = verify_intertwining(n, r, c);
        ASSERT_TRUE(rep.passed()) << to_string(c) << " " << r.to_string() << " " << rep.detail;
      }
}

TEST(Intertwining, ClosedFormsAgree) {
  for (const auto& r : signatures_in_box(4, 0, 2))
    for (const auto& qq : enumerate_interlacing(r))
      for (Corner c : {Corner::kRaise, Corner::kLower}) ASSERT_TRUE(closed_form_agrees(KernelParams(r, qq), c));
}

// Replays of the calibration: each rejected reading must fail where it was rejected.
TEST(Calibration, GlobalSignsAtRankOne) {
  const Signature r({1, 0});
  EXPECT_TRUE(intertwining_identity(1, r, Corner::kRaise, kRaiseSign));
  EXPECT_FALSE(intertwining_identity(1, r, Corner::kRaise, -kRaiseSign));
  EXPECT_TRUE(intertwining_identity(1, r, Corner::kLower, kLowerSign));
  EXPECT_FALSE(intertwining_identity(1, r, Corner::kLower, -kLowerSign));
}

TEST(Calibration, PrintedRaiseProductFailsAtRankThree) {
  for (const auto& r : signatures_in_box(3, 0, 3))
    EXPECT_TRUE(intertwining_identity(2, r, Corner::kRaise, 1, RaiseReading::kPrintedProduct)) << r.to_string();
  EXPECT_FALSE(intertwining_identity(3, Signature({3, 3, 3, 1}), Corner::kRaise, 1, RaiseReading::kPrintedProduct));
  EXPECT_TRUE(intertwining_identity(3, Signature({3, 3, 3, 1}), Corner::kRaise, 1));
}

TEST(Calibration, ShiftedCoefficientFails) {
  bool any_failure = false;
  for (const auto& r : signatures_in_box(2, 0, 3))
    any_failure = any_failure || !intertwining_identity(1, r, Corner::kRaise, 1, RaiseReading::kShiftedCoefficient);
  EXPECT_TRUE(any_failure);
}

TEST(Calibration, LowerChainsFromOneFailAtRankTwo) {
  for (const auto& r : signatures_in_box(2, 0, 3))
    EXPECT_TRUE(intertwining_identity(1, r, Corner::kLower, 1, RaiseReading::kCalibrated, LowerReading::kChainsFromOne));
  EXPECT_FALSE(intertwining_identity(2, Signature({2, 1, 0}), Corner::kLower, 1, RaiseReading::kCalibrated,
                                     LowerReading::kChainsFromOne));
}

TEST(Stability, Examples) {
  EXPECT_TRUE(verify_family_stability(2, Signature({0, 0, 0})).passed());
  const auto rep = verify_family_stability(2, Signature({2, 1, 0}));
  EXPECT_TRUE(rep.passed()) << rep.detail;
  EXPECT_GT(rep.spanning_families, 1u);
}

TEST(Relations, WeightsAndSpotCheck) {
  for (const auto& r : signatures_in_box(3, 0, 2)) {
    for (int k = 1; k <= 2; ++k) {
      EXPECT_TRUE(weight_relation_holds(2, r, Corner::kRaise, k)) << r.to_string();
      EXPECT_TRUE(weight_relation_holds(2, r, Corner::kLower, k)) << r.to_string();
    }
    EXPECT_TRUE(lower_commutator_spot_check(2, r)) << r.to_string();
  }
  EXPECT_THROW(lower_commutator_spot_check(1, Signature({1, 0})), std::invalid_argument);
}

}  // namespace
}  // namespace glr
