#include <cmath>

#include <gtest/gtest.h>

#include "turan/big_rational.hpp"
#include "turan/sequence.hpp"

using namespace turan;

TEST(BigRational, LowestTermsPositiveDenominator) {
  const BigRational q(6, -4);
  EXPECT_EQ(q.numerator(), "-3");
  EXPECT_EQ(q.denominator(), "2");
  EXPECT_EQ(q.to_string(), "-3/2");
  EXPECT_EQ(BigRational(4, 2).to_string(), "2");
  EXPECT_EQ(BigRational(4, 2).to_fraction_string(), "2/1");
  EXPECT_THROW(BigRational(1, 0), std::domain_error);
}

TEST(BigRational, Parse) {
  EXPECT_EQ(BigRational::parse("1/3"), BigRational(1, 3));
  EXPECT_EQ(BigRational::parse(" -10/4 "), BigRational(-5, 2));
  EXPECT_EQ(BigRational::parse("0.25"), BigRational(1, 4));
  EXPECT_EQ(BigRational::parse("-1.5e-3"), BigRational(-3, 2000));
  EXPECT_EQ(BigRational::parse("12e2"), BigRational(1200));
  EXPECT_EQ(BigRational::parse(".5"), BigRational(1, 2));
  EXPECT_THROW(BigRational::parse("1/0"), std::domain_error);
  EXPECT_THROW(BigRational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(BigRational::parse(""), std::invalid_argument);
  EXPECT_THROW(BigRational::parse("1/-"), std::invalid_argument);
}

TEST(BigRational, ArithmeticAndOrder) {
  const BigRational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, BigRational(1, 2));
  EXPECT_EQ(a - b, BigRational(1, 6));
  EXPECT_EQ(a * b, BigRational(1, 18));
  EXPECT_EQ(a / b, BigRational(2));
  EXPECT_EQ(-a, BigRational(-1, 3));
  EXPECT_LT(b, a);
  EXPECT_EQ(BigRational(-2, 5).abs(), BigRational(2, 5));
  EXPECT_EQ(BigRational(-2, 5).inverse(), BigRational(-5, 2));
  EXPECT_THROW(a / BigRational(0), std::domain_error);
  EXPECT_THROW(BigRational(0).inverse(), std::domain_error);
  EXPECT_EQ(BigRational(7).to_long(), 7);
  EXPECT_THROW(BigRational(7, 2).to_long(), std::range_error);
  EXPECT_EQ(factorial_rational(10), BigRational(3628800));
}

TEST(BigRational, LargeValuesStayExact) {
  BigRational x(1);
  for (int i = 0; i < 200; ++i) x *= BigRational(3, 2);
  for (int i = 0; i < 200; ++i) x /= BigRational(3, 2);
  EXPECT_EQ(x, BigRational(1));
}

TEST(Sequence, FlagsOnConstant) {
  const auto s = CoefficientSequence::constant(BigRational(1));
  EXPECT_TRUE(s.flags().doubly_positive());
  EXPECT_FALSE(s.flags().factorial_weighted_log_concave); // {k!} is log-convex
  EXPECT_EQ(s.leading_zero_count(), 0u);
  EXPECT_EQ(s[100], 1.0);
}

TEST(Sequence, FlagsOnLogConvexAndInternalZero) {
  std::vector<BigRational> fact{1, 1, 2, 6, 24, 120};
  const auto s = CoefficientSequence::from_rationals(fact);
  EXPECT_FALSE(s.flags().log_concave);

  const auto z = CoefficientSequence::from_values({1.0, 0.0, 1.0});
  EXPECT_FALSE(z.flags().no_internal_zeros);
  EXPECT_FALSE(z.flags().log_concave);
}

TEST(Sequence, LeadingZerosAndFiniteSupport) {
  const auto s = CoefficientSequence::from_rationals({0, 0, 1, 2, 1});
  EXPECT_EQ(s.leading_zero_count(), 2u);
  EXPECT_TRUE(s.flags().no_internal_zeros);
  EXPECT_TRUE(s.flags().log_concave);
  EXPECT_EQ(s[7], 0.0);
  EXPECT_EQ(s.exact(3), BigRational(2));
  EXPECT_EQ(s.exact(9), BigRational(0));
}

TEST(Sequence, FactorialWeightedView) {
  // 1/k! is log-concave and {1/k! * k!} = 1 is too
  const auto inv = CoefficientSequence::from_exact_generator(
      [](std::size_t k) { return factorial_rational(static_cast<unsigned>(k)).inverse(); });
  EXPECT_TRUE(inv.flags().log_concave);
  EXPECT_TRUE(inv.flags().factorial_weighted_log_concave);
  // 2^k is log-concave (geometric) but {2^k k!} is log-convex
  const auto geo = CoefficientSequence::from_generator([](std::size_t k) { return std::ldexp(1.0, int(k)); });
  EXPECT_TRUE(geo.flags().log_concave);
  EXPECT_FALSE(geo.flags().factorial_weighted_log_concave);
  EXPECT_THROW(geo.exact(0), std::invalid_argument);
}
