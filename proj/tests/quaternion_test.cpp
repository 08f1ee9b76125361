#include "shimura/quaternion.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shimura/error.hpp"

namespace shimura::quaternion {
namespace {

using abfield::compositum;
using abfield::quadratic_field;

abfield::AbelianField cubic_l() {
  return abfield::cyclotomic_subfield(9, std::vector<std::int64_t>{8});
}

std::vector<QuaternionAlgebra> algebras_up_to(std::int64_t bound) {
  std::vector<QuaternionAlgebra> out;
  for (std::int64_t d = 2; d <= bound; ++d) {
    try {
      out.push_back(from_discriminant(d));
    } catch (const InvalidArgument&) {
    }
  }
  return out;
}

TEST(FromDiscriminantTest, Examples) {
  EXPECT_EQ(from_discriminant(39).ramified_primes(), (std::vector<std::int64_t>{3, 13}));
  EXPECT_EQ(from_discriminant(62).ramified_primes(), (std::vector<std::int64_t>{2, 31}));
  EXPECT_EQ(from_discriminant(6).ramified_primes(), (std::vector<std::int64_t>{2, 3}));
  EXPECT_EQ(from_discriminant(86).discriminant(), 86);
}

TEST(FromDiscriminantTest, Errors) {
  EXPECT_THROW(from_discriminant(12), InvalidArgument);  // not squarefree
  EXPECT_THROW(from_discriminant(30), InvalidArgument);  // three primes: definite
  EXPECT_THROW(from_discriminant(7), InvalidArgument);
  EXPECT_THROW(from_discriminant(1), InvalidArgument);
  EXPECT_THROW(from_discriminant(-6), InvalidArgument);
}

TEST(FromDiscriminantTest, SmallestDiscriminants) {
  std::vector<std::int64_t> discs;
  for (const auto& b : algebras_up_to(60)) discs.push_back(b.discriminant());
  EXPECT_EQ(discs, (std::vector<std::int64_t>{6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39, 46, 51, 55, 57, 58}));
}

TEST(FromSymbolTest, Examples) {
  const auto b62 = from_symbol(62, 13);
  ASSERT_TRUE(std::holds_alternative<QuaternionAlgebra>(b62));
  EXPECT_EQ(std::get<QuaternionAlgebra>(b62).discriminant(), 62);

  const auto b86 = from_symbol(86, 5);
  ASSERT_TRUE(std::holds_alternative<QuaternionAlgebra>(b86));
  EXPECT_EQ(std::get<QuaternionAlgebra>(b86).discriminant(), 86);

  const auto split = from_symbol(1, 1);
  ASSERT_TRUE(std::holds_alternative<SymbolReport>(split));
  EXPECT_EQ(std::get<SymbolReport>(split).kind, SymbolReport::Kind::kSplit);

  const auto hamilton = from_symbol(-1, -1);
  ASSERT_TRUE(std::holds_alternative<SymbolReport>(hamilton));
  EXPECT_EQ(std::get<SymbolReport>(hamilton).kind, SymbolReport::Kind::kDefinite);

  EXPECT_THROW(from_symbol(0, 5), InvalidArgument);
}

TEST(FromSymbolTest, MatchesBruteForceLocalSymbols) {
  // every prime dividing a or b is at most 7, so the search oracle sees
  // all finite places
  for (std::int64_t a = -42; a <= 42; ++a) {
    for (std::int64_t b = -42; b <= 42; ++b) {
      if (a == 0 || b == 0) continue;
      bool small = true;
      for (std::int64_t x : {a, b}) {
        std::int64_t r = x < 0 ? -x : x;
        for (std::int64_t p : {2, 3, 5, 7}) {
          while (r % p == 0) r /= p;
        }
        small = small && r == 1;
      }
      if (!small) continue;
      std::vector<std::int64_t> ramified;
      for (std::int64_t p : {2, 3, 5, 7}) {
        if (oracle::hilbert_by_search(a, b, p) == -1) ramified.push_back(p);
      }
      const auto result = from_symbol(a, b);
      if (a < 0 && b < 0) {
        ASSERT_TRUE(std::holds_alternative<SymbolReport>(result)) << a << "," << b;
        EXPECT_EQ(std::get<SymbolReport>(result).kind, SymbolReport::Kind::kDefinite);
      } else if (ramified.empty()) {
        ASSERT_TRUE(std::holds_alternative<SymbolReport>(result)) << a << "," << b;
        EXPECT_EQ(std::get<SymbolReport>(result).kind, SymbolReport::Kind::kSplit);
      } else {
        ASSERT_TRUE(std::holds_alternative<QuaternionAlgebra>(result)) << a << "," << b;
        EXPECT_EQ(std::get<QuaternionAlgebra>(result).ramified_primes(), ramified);
      }
    }
  }
}

TEST(SplitsOverTest, Examples) {
  const auto b39 = from_discriminant(39);
  const auto s = splits_over(b39, quadratic_field(-13));
  EXPECT_TRUE(s.splits);
  EXPECT_EQ(s.local, (std::vector<LocalDegree>{{3, 1, 2}, {13, 2, 1}}));

  const auto l39 = compositum(cubic_l(), quadratic_field(-39));
  const auto s62 = splits_over(from_discriminant(62), l39);
  EXPECT_FALSE(s62.splits);
  EXPECT_EQ(s62.local.front(), (LocalDegree{2, 1, 3}));

  for (const auto& b : algebras_up_to(100)) EXPECT_FALSE(splits_over(b, abfield::rationals()).splits);
}

TEST(SplitsOverTest, QuadraticFieldsMatchKroneckerCriterion) {
  for (const auto& b : algebras_up_to(150)) {
    for (std::int64_t d = -60; d <= 60; ++d) {
      if (d == 0 || d == 1 || !oracle::is_squarefree_trial(d)) continue;
      const std::int64_t disc = oracle::mod(d, 4) == 1 ? d : 4 * d;
      bool some_prime_splits = false;
      for (const std::int64_t p : b.ramified_primes()) {
        some_prime_splits = some_prime_splits || oracle::kronecker_by_definition(disc, p) == 1;
      }
      ASSERT_EQ(splits_over(b, quadratic_field(d)).splits, !some_prime_splits) << b.discriminant() << " " << d;
    }
  }
}

TEST(SplitsOverTest, PreservedUpwards) {
  std::mt19937_64 rng(29);
  const auto algebras = algebras_up_to(120);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t d1 = static_cast<std::int64_t>(rng() % 80) - 40;
    const std::int64_t d2 = static_cast<std::int64_t>(rng() % 80) - 40;
    if (d1 == 0 || d1 == 1 || d2 == 0 || d2 == 1) continue;
    if (!oracle::is_squarefree_trial(d1) || !oracle::is_squarefree_trial(d2)) continue;
    const auto f = quadratic_field(d1);
    const auto k = compositum(f, quadratic_field(d2));
    for (const auto& b : algebras) {
      if (splits_over(b, f).splits) EXPECT_TRUE(splits_over(b, k).splits);
    }
  }
}

TEST(ClassBTest, Examples) {
  const auto b39_2 = in_class_b(from_discriminant(39), 2);
  EXPECT_TRUE(b39_2.member);
  EXPECT_EQ(b39_2.witnesses, (std::vector<QuadraticWitness>{{1, 13}, {2, 3}}));

  const auto b62_3 = in_class_b(from_discriminant(62), 3);
  EXPECT_TRUE(b62_3.member);
  EXPECT_EQ(b62_3.witnesses, (std::vector<QuadraticWitness>{{3, 31}}));

  const auto b86_3 = in_class_b(from_discriminant(86), 3);
  EXPECT_EQ(b86_3.witnesses, (std::vector<QuadraticWitness>{{3, 43}}));

  // (-13 | 3) = -1 and 13 | 52: neither prime of 39 splits in Q(sqrt(-13))
  EXPECT_EQ(oracle::kronecker_by_definition(-52, 3), -1);
  const auto b39_13 = in_class_b(from_discriminant(39), 13);
  EXPECT_FALSE(b39_13.member);
  EXPECT_EQ(b39_13.witnesses, (std::vector<QuadraticWitness>{{13, std::nullopt}}));

  EXPECT_THROW(in_class_b(from_discriminant(6), 4), InvalidArgument);
}

TEST(ClassBTest, AgreesWithSplittingRoute) {
  for (const auto& b : algebras_up_to(400)) {
    for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
      ASSERT_EQ(in_class_b(b, q).member, in_class_b_via_splitting(b, q)) << b.discriminant() << " " << q;
    }
  }
}

}  // namespace
}  // namespace shimura::quaternion
