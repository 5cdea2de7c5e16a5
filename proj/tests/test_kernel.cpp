#include "support.hpp"

#include "glrestrict/kernel.hpp"
#include "glrestrict/random.hpp"
#include "glrestrict/rep_space.hpp"

#include <gtest/gtest.h>

namespace glr {
namespace {

using test::u;
using test::z;

TEST(UExt, Examples) {
  const PolyMatrix one = build_u_ext(PolyMatrix::identity(1));
  ASSERT_EQ(one.rows(), 1u);
  ASSERT_EQ(one.cols(), 2u);
  EXPECT_EQ(one(1, 1), MultiPoly(1L));
  EXPECT_TRUE(one(1, 2).is_zero());

  const PolyMatrix two = build_u_ext(kernel_u(2));
  ASSERT_EQ(two.cols(), 3u);
  EXPECT_EQ(two(1, 2), u(1, 2));
  EXPECT_TRUE(two(1, 3).is_zero());
  EXPECT_TRUE(two(2, 3).is_zero());
  EXPECT_EQ(two(2, 2), MultiPoly(1L));
}

TEST(Minors, PhiIsStackedDeterminant) {
  const PolyMatrix zz = kernel_z(3);
  const PolyMatrix uu = kernel_u(3);
  const PolyMatrix stack = vstack(submatrix(zz, {1, 2}, iota_indices(4)), submatrix(build_u_ext(uu), {1, 2}, iota_indices(4)));
  EXPECT_EQ(phi(2, zz, uu), test::permutation_det(stack));
  EXPECT_THROW(phi(4, zz, uu), std::out_of_range);
}

TEST(Minors, PsiExamples) {
  EXPECT_EQ(psi(1, kernel_z(2), kernel_u(2)), u(1, 2) - z(1, 2));

  PolyMatrix m(3, 3);
  m(1, 1) = 1;
  m(1, 2) = z(1, 2);
  m(1, 3) = z(1, 3);
  m(2, 2) = 1;
  m(2, 3) = z(2, 3);
  m(3, 1) = 1;
  m(3, 2) = u(1, 2);
  m(3, 3) = u(1, 3);
  EXPECT_EQ(psi(1, kernel_z(3), kernel_u(3)), test::permutation_det(m));

  // U equal to the top rows of Z makes two rows coincide.
  for (int n = 2; n <= 4; ++n) {
    const PolyMatrix zz = kernel_z(n);
    const PolyMatrix cut = submatrix(zz, iota_indices(n), iota_indices(n));
    for (int a = 1; a < n; ++a) EXPECT_TRUE(psi(a, zz, cut).is_zero()) << n << " " << a;
  }
}

TEST(Minors, SpecsAndDefaults) {
  const PolyMatrix zz = kernel_z(3);
  const PolyMatrix uu = kernel_u(3);
  for (int a = 1; a <= 3; ++a) EXPECT_EQ(minor_value(default_minor(MinorKind::kPhi, 3, a), zz, uu), phi(a, zz, uu));
  for (int a = 1; a < 3; ++a) EXPECT_EQ(minor_value(default_minor(MinorKind::kPsi, 3, a), zz, uu), psi(a, zz, uu));
  MinorSpec repeated = default_minor(MinorKind::kPhi, 3, 1);
  repeated.z_rows = {1, 1, 2};
  EXPECT_TRUE(phi_minor(repeated, zz, uu).is_zero());
  MinorSpec malformed = default_minor(MinorKind::kPhi, 3, 1);
  malformed.z_rows = {1, 2};
  EXPECT_THROW(minor_value(malformed, zz, uu), std::invalid_argument);
}

TEST(MinorsProperty, RLemmaOnAllMinors) {
  for (int n = 1; n <= 3; ++n) {
    const PolyMatrix zz = kernel_z(n);
    const PolyMatrix uu = kernel_u(n);
    for (const auto& spec : all_minors(n)) {
      const MultiPoly f = minor_value(spec, zz, uu);
      for (VarKind kind : {VarKind::Z, VarKind::U}) {
        const int size = kind == VarKind::Z ? n + 1 : n;
        for (int k = 1; k <= size; ++k)
          for (int l = k + 1; l <= size; ++l) {
            MultiPoly expected;
            if (const auto img = predicted_r_image(spec, kind, k, l)) {
              expected = minor_value(img->minor, zz, uu) * Rational(img->sign);
            }
            ASSERT_EQ(apply_r(n, kind, k, l, f), expected);
          }
      }
    }
  }
}

TEST(KernelParams, Validation) {
  try {
    KernelParams(Signature({2, 1}), Signature({0}));
    ADD_FAILURE() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "non-interlacing signatures");
  }
  EXPECT_THROW(KernelParams(Signature({2, 1}), Signature({1, 0})), std::invalid_argument);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(build_kernel(KernelParams(Signature({1, 0}), Signature({1}))).value, -z(1, 2));
  EXPECT_EQ(build_kernel(KernelParams(Signature({1, 0}), Signature({0}))).value, MultiPoly(1L));
  EXPECT_EQ(build_kernel(KernelParams(Signature({1, 0}), Signature({1}))).value.to_string(), "-z[1,2]");
}

TEST(Kernel, ThreeByThreeExponentLayout) {
  const Signature r({5, 3, 1, 0});
  const Signature qq({4, 2, 0});
  const KernelParams params(r, qq);
  const Signature p = params.p();
  // (p3 + q1, -p3 - q2, p2 + q2, -p2 - q3, p1 + q3) on (Phi1, Psi1, Phi2, Psi2, Phi3)
  EXPECT_EQ(params.phi_exponents(), (std::vector<long>{p.entry(3) + qq.entry(1), p.entry(2) + qq.entry(2), p.entry(1) + qq.entry(3)}));
  EXPECT_EQ(params.psi_exponents(), (std::vector<long>{-p.entry(3) - qq.entry(2), -p.entry(2) - qq.entry(3)}));
}

TEST(KernelProperty, ExponentFormsAgreeAndAreNonnegative) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& r : signatures_in_box(n + 1, -1, 2))
      for (const auto& qq : enumerate_interlacing(r)) {
        const KernelParams params(r, qq);
        ASSERT_EQ(params.phi_exponents(), params.phi_exponents_p_form());
        ASSERT_EQ(params.psi_exponents(), params.psi_exponents_p_form());
        for (long e : params.phi_exponents()) ASSERT_GE(e, 0);
        for (long e : params.psi_exponents()) ASSERT_GE(e, 0);
      }
}

TEST(KernelProperty, ZhelobenkoMembership) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& r : signatures_in_box(n + 1, 0, 2))
      for (const auto& qq : enumerate_interlacing(r))
        ASSERT_TRUE(check_zhelobenko_membership(build_kernel(KernelParams(r, qq)))) << r.to_string() << qq.to_string();
}

// Degree two in z_12 violates the z-side condition for p = (0,-1).
TEST(Kernel, MembershipDetectsWrongPolynomial) {
  KernelPoly k = build_kernel(KernelParams(Signature({1, 0}), Signature({1})));
  k.value = z(1, 2) * z(1, 2);
  EXPECT_FALSE(check_zhelobenko_membership(k));
}

TEST(Pluecker, AdmissibleTriplesAtThree) {
  EXPECT_TRUE(pluecker_admissible(PlueckerRelation::kPlu1, 1, 2, 2, 3));
  EXPECT_TRUE(check_pluecker(PlueckerRelation::kPlu1, 1, 2, 2, 3));
  EXPECT_FALSE(pluecker_admissible(PlueckerRelation::kPlu2, 1, 2, 2, 3));
  EXPECT_THROW(check_pluecker(PlueckerRelation::kPlu2, 1, 2, 2, 3), std::invalid_argument);
  for (int n = 2; n <= 4; ++n)
    for (auto rel : {PlueckerRelation::kPlu1, PlueckerRelation::kPlu2, PlueckerRelation::kPlu3})
      for (const auto& t : admissible_triples(rel, n)) EXPECT_TRUE(check_pluecker(rel, t[0], t[1], t[2], n)) << to_string(rel);
}

TEST(Invariance, IdentityAndRandom) {
  const KernelParams params(Signature({2, 1, 0}), Signature({1, 0}));
  EXPECT_TRUE(check_kernel_invariance(params, PolyMatrix::identity(2)));
  RandomSource rng(8);
  for (int trial = 0; trial < 3; ++trial) {
    const PolyMatrix g = rng.gl_matrix(2);
    for (const auto& r : signatures_in_box(3, 0, 1))
      for (const auto& qq : enumerate_interlacing(r)) EXPECT_TRUE(check_kernel_invariance(KernelParams(r, qq), g));
  }
}

}  // namespace
}  // namespace glr
