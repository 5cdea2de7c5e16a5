#include "glrestrict/signature.hpp"

#include <gtest/gtest.h>

#include <numeric>

namespace glr {
namespace {

// Weyl dimension formula, an oracle independent of pattern counting.
std::uint64_t weyl_dimension(const Signature& p) {
  const int n = static_cast<int>(p.size());
  long double num = 1;
  long double den = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num *= static_cast<long double>(p.entry(i) - p.entry(j) + j - i);
      den *= static_cast<long double>(j - i);
    }
  return static_cast<std::uint64_t>(num / den + 0.5L);
}

TEST(Signature, Validation) {
  EXPECT_THROW(Signature({1, 2}), std::invalid_argument);
  EXPECT_FALSE(Signature::try_make({0, 1}).has_value());
  EXPECT_EQ(Signature::parse("5,3,1,0"), Signature({5, 3, 1, 0}));
  EXPECT_EQ(Signature::parse("-1,-3"), Signature({-1, -3}));
  EXPECT_THROW(Signature::parse("1,x"), std::invalid_argument);
  EXPECT_EQ(Signature({2, 1, 0}).to_string(), "(2,1,0)");
}

TEST(Signature, Dual) {
  EXPECT_EQ(Signature({0, 0, 0}).dual(), Signature({0, 0, 0}));
  EXPECT_EQ(Signature({2, 1, 0}).dual(), Signature({0, -1, -2}));
}

TEST(Signature, InterlacingExamples) {
  const auto a = enumerate_interlacing(Signature({1, 0}));
  EXPECT_EQ(a, (std::vector<Signature>{Signature({1}), Signature({0})}));
  const auto b = enumerate_interlacing(Signature({2, 1, 0}));
  EXPECT_EQ(b, (std::vector<Signature>{Signature({2, 1}), Signature({2, 0}), Signature({1, 1}), Signature({1, 0})}));
  EXPECT_EQ(enumerate_interlacing(Signature({3, 3, 3})), std::vector<Signature>{Signature({3, 3})});
  EXPECT_FALSE(interlaces(Signature({2, 1}), Signature({0})));
}

TEST(Signature, GtCountExamples) {
  EXPECT_EQ(count_gt_patterns(Signature({0, 0, 0})), 1u);
  EXPECT_EQ(count_gt_patterns(Signature({1, 0, 0})), 3u);
  EXPECT_EQ(count_gt_patterns(Signature({2, 1, 0})), 8u);
}

TEST(SignatureProperty, GtCountMatchesWeylAndBranching) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : signatures_in_box(n, -1, 3)) {
      ASSERT_EQ(count_gt_patterns(p), weyl_dimension(p)) << p.to_string();
      if (n == 1) continue;
      std::uint64_t total = 0;
      for (const auto& q : enumerate_interlacing(p)) {
        ASSERT_TRUE(interlaces(p, q));
        total += count_gt_patterns(q);
      }
      ASSERT_EQ(total, count_gt_patterns(p));
    }
  }
}

TEST(SignatureProperty, BoxCount) {
  // Weakly decreasing n-tuples from {0..m}: C(n+m, n).
  EXPECT_EQ(signatures_in_box(3, 0, 3).size(), 20u);
  EXPECT_EQ(signatures_in_box(4, 0, 3).size(), 35u);
  EXPECT_EQ(signatures_in_box(2, 0, 2).size(), 6u);
}

}  // namespace
}  // namespace glr
