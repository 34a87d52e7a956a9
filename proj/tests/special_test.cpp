#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "turan/errors.hpp"
#include "turan/special.hpp"

using namespace turan;

namespace {
const double kE = std::exp(1.0);

double rel_err(double got, double want) { return std::fabs(got - want) / std::max(std::fabs(want), 1e-300); }
} // namespace

TEST(Bessel, OracleValues) {
  EXPECT_EQ(bessel_i(0, 0), 1.0);
  EXPECT_EQ(bessel_i(2, 0), 0.0);
  EXPECT_LT(rel_err(bessel_i(0, 1), 1.26606587775200833559824462521), 1e-14);
  EXPECT_LT(rel_err(bessel_i(0.5, 1), 0.937674888245487646717262884391), 1e-14);
  EXPECT_LT(rel_err(bessel_i(0.5, 1), std::sqrt(2.0 / M_PI) * std::sinh(1.0)), 1e-14);
  EXPECT_LT(rel_err(bessel_i(-1.5, 2), 0.984941053000236439697123464155), 1e-13);
  EXPECT_LT(rel_err(bessel_i(-0.3, 0.7), 1.24704987734565276996496864809), 1e-13);
}

TEST(Bessel, IntegerOrderSymmetryAndStd) {
  for (double u : {0.1, 1.0, 5.0, 30.0}) {
    EXPECT_LT(rel_err(bessel_i(-1, u), bessel_i(1, u)), 1e-12) << u;
    for (double nu : {0.0, 0.25, 1.0, 3.5})
      EXPECT_LT(rel_err(bessel_i(nu, u), std::cyl_bessel_i(nu, u)), 1e-12) << nu << " " << u;
  }
}

TEST(Bessel, Domain) {
  EXPECT_THROW(bessel_i(-2.0, 1.0), PreconditionError);
  EXPECT_THROW(bessel_i(0.0, -1.0), PreconditionError);
  EXPECT_THROW(bessel_i(0.0, 701.0), std::overflow_error);
  EXPECT_TRUE(std::isinf(bessel_i(-0.5, 0.0)));
  EXPECT_EQ(bessel_i(-1.0, 0.0), 0.0);
}

TEST(Bessel, Turanian) {
  EXPECT_EQ(bessel_turanian(0.7, 0.0, 2.0), 0.0);
  EXPECT_LT(rel_err(bessel_turanian(0, 1, 2), 2.666383547296083701690830), 1e-13);
  EXPECT_LT(rel_err(bessel_turanian(0.3, 0.5, 1.7), 0.505251650089273982684188501476), 1e-12);
  EXPECT_LT(rel_err(bessel_turanian(-0.5, 1.25, 3.0), 10.1063582918476565814075852392), 1e-12);
  EXPECT_NEAR(bessel_turanian(0, 1, 0), 1.0, 1e-15);
  EXPECT_THROW(bessel_turanian(-1.5, 0.1, 1.0), PreconditionError);
  EXPECT_THROW(bessel_turanian(0.0, 2.5, 1.0), PreconditionError);
}

TEST(Bessel, Sandwich) {
  const auto r = bessel_bounds_check(0, 1, 2);
  EXPECT_EQ(r.check_id, "bessel.i3_sandwich");
  EXPECT_TRUE(r.passed());
  // equality with the lower bound at u = 0
  const auto z = bessel_bounds_check(1, 1, 0);
  EXPECT_TRUE(z.passed());
  EXPECT_NEAR(std::get<double>(z.margin), 0.0, 1e-15);
  EXPECT_TRUE(bessel_bounds_check(-1, 1, 1).passed());
  EXPECT_EQ(bessel_bounds_check(0.5, 0.75, 3).check_id, "bessel.i2_sandwich");

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> nu_d(-1.0, 5.0), t_d(0.0, 1.0), u_d(0.0, 20.0);
  for (int i = 0; i < 300; ++i) {
    const double nu = nu_d(rng), eps = t_d(rng) * (nu + 2.0), u = u_d(rng);
    const auto c = bessel_bounds_check(nu, eps, u);
    EXPECT_TRUE(c.passed()) << nu << " " << eps << " " << u;
    if (nu > -1.0) {
      const double h = std::max(1e-3, t_d(rng) * (nu + 1.0));
      EXPECT_TRUE(bessel_logconcavity_check(nu, h, u).passed()) << nu << " " << h << " " << u;
    }
  }
}

TEST(Bessel, Coefficients) {
  const auto exact = bessel_coefficients_check(BigRational(1, 2), BigRational(1, 2), 30);
  EXPECT_TRUE(exact.passed());
  EXPECT_EQ(param_to_string(exact.params[3].value), "exact");
  const auto flt = bessel_coefficients_check(BigRational(0), BigRational(1), 30);
  EXPECT_TRUE(flt.passed());
  EXPECT_EQ(param_to_string(flt.params[3].value), "floating");
  const auto wide = bessel_coefficients_check(BigRational(1), BigRational(5, 2), 30);
  EXPECT_TRUE(wide.passed());
  EXPECT_EQ(wide.params.back().name, "regime");

  // the boundary point: Delta_1(-1, u) = Delta_1(1, u), so after dividing by (u/2)^{-2}
  // the series starts at (u/2)^4 and is the nu = 1 series shifted by two
  const auto c = bessel_coefficients_float(-1, 1, 30);
  const auto shifted = bessel_coefficients_float(1, 1, 28);
  EXPECT_EQ(c[0].value, 0.0);
  EXPECT_EQ(c[1].value, 0.0);
  for (std::size_t m = 2; m < c.size(); ++m) EXPECT_LT(rel_err(c[m].value, shifted[m - 2].value), 1e-12) << m;
  EXPECT_EQ(bessel_coefficients_check(BigRational(-1), BigRational(1), 30).status, Status::fail);

  // the whole nu = -1 line: c_1 = 1/(Gamma(eps)Gamma(1-eps)) + 1/(Gamma(1+eps)Gamma(-eps)) = 0
  for (const BigRational& e : {BigRational(1, 4), BigRational(1, 2), BigRational(3, 4)}) {
    const auto r = bessel_coefficients_check(BigRational(-1), e, 30);
    EXPECT_EQ(r.status, Status::fail) << e.to_string();
    EXPECT_EQ(param_to_string(r.params[3].value), "reflection");
    EXPECT_EQ(std::get<std::int64_t>(r.params.back().value), 1);
    EXPECT_EQ(std::get<BigRational>(r.margin), BigRational(0));
  }
}

TEST(Hypergeometric, ClosedForms) {
  EXPECT_LT(rel_err(pfq({}, 1.0), kE), 1e-15);
  EXPECT_LT(rel_err(pfq({{2.0}, {}}, 0.5), 4.0), 1e-14);
  EXPECT_LT(rel_err(pfq({{1.0, 1.0}, {2.0}}, 0.5), 2.0 * std::log(2.0)), 1e-14);
  EXPECT_LT(rel_err(pfq({{0.5, 1.5}, {2.5}}, -0.9), 0.813499280219221349795873251349), 1e-13);
  EXPECT_LT(rel_err(pfq({{1.5}, {2.0, 0.5}}, -3.0), -0.837854977099153273195819129301), 1e-12);
  EXPECT_LT(rel_err(pfq({{1.0, 2.0, 0.5}, {3.0, 1.5}}, 0.75), 1.27346267325302360072355298437), 1e-12);
  for (double x : {-0.7, 0.2, 0.9}) EXPECT_LT(rel_err(pfq({{1.3}, {}}, x), std::pow(1.0 - x, -1.3)), 1e-12) << x;
  // terminating
  EXPECT_DOUBLE_EQ(pfq({{-2.0}, {1.0}}, 3.0), 1.0 - 6.0 + 4.5);
}

TEST(Hypergeometric, Domain) {
  EXPECT_THROW(pfq({{1.0, 1.0}, {2.0}}, 1.0), DomainError);
  EXPECT_THROW(pfq({{1.0, 1.0, 1.0}, {2.0}}, 0.1), DomainError);
  EXPECT_THROW(pfq({{1.0}, {-2.0}}, 0.1), DomainError);
  EXPECT_THROW(kummer(1.0, 0.0, 1.0), DomainError);
}

TEST(Kummer, Values) {
  for (double x : {-2.0, 0.5, 3.0}) EXPECT_LT(rel_err(kummer(1.7, 1.7, x), std::exp(x)), 1e-14);
  EXPECT_LT(rel_err(kummer(1, 2, 1), kE - 1.0), 1e-15);
  EXPECT_LT(rel_err(kummer(0.5, 1.5, -3), 0.504343560231438807038323367683), 1e-13);
  EXPECT_LT(rel_err(kummer(2.5, 0.75, 4.5), 1855.03953153613525874416332024), 1e-13);
  EXPECT_LT(rel_err(kummer_regularized(1.5, 0, 2), 31.7719756967321862656137602247), 1e-13);
  EXPECT_LT(rel_err(kummer_regularized(1.5, -2.5, 2), 233.975498623343101432395681823), 1e-13);
  EXPECT_LT(rel_err(kummer_regularized(0.7, -3, -1.2), 0.334969900225124371106314768379), 1e-12);
  EXPECT_LT(rel_err(kummer_regularized(0.5, 3.5, 2.0), kummer(0.5, 3.5, 2.0) / std::tgamma(3.5)), 1e-14);
  // derivative identity against a central difference
  const double h = 1e-5;
  const double fd = (kummer(1.3, 2.2, 1.5 + h) - kummer(1.3, 2.2, 1.5 - h)) / (2 * h);
  EXPECT_NEAR(kummer_derivative(1.3, 2.2, 1.5), fd, 1e-8);
}

TEST(Kummer, LogDerivBounds) {
  const auto k = kummer_logderiv_bounds(2, 3, 1);
  EXPECT_NEAR(k.lower, (-1 + std::sqrt(5.0)) / 2, 1e-15);
  EXPECT_NEAR(k.upper, (-1 + std::sqrt(19.0 / 3)) / 2, 1e-15);
  EXPECT_FALSE(k.flipped);
  const double ratio = kummer_derivative(2, 3, 1) / kummer(2, 3, 1);
  EXPECT_NEAR(ratio, 0.71828182845904519549, 1e-14);
  EXPECT_TRUE(kummer_logderiv_check(2, 3, 1).passed());
  EXPECT_TRUE(kummer_logderiv_bounds(2, 1, 1).flipped);
  EXPECT_TRUE(kummer_logderiv_check(2, 1, 1).passed());
  const auto d = kummer_logderiv_bounds(1.5, 1.5, 2.0);
  EXPECT_TRUE(d.degenerate);
  EXPECT_EQ(d.lower, 1.0);
  EXPECT_THROW(kummer_logderiv_bounds(0.5, 2, 1), PreconditionError);
  // small-b case where the unmodified lower root would exceed F'/F
  const auto s = kummer_logderiv_bounds(1.0017, 0.7006, 0.0485);
  EXPECT_TRUE(s.small_b_branch);
  EXPECT_TRUE(kummer_logderiv_check(1.0017, 0.7006, 0.0485).passed());
  // x -> 0+ for b > 1: bounds approach (a-1)/(b-1) and a/b
  const auto z = kummer_logderiv_bounds(2, 3, 1e-7);
  EXPECT_NEAR(z.lower, 0.5, 1e-6);
  EXPECT_NEAR(z.upper, 2.0 / 3, 1e-6);
}

TEST(Kummer, RandomContainmentAndContiguity) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> a_d(1.0, 6.0), b_d(0.05, 8.0), x_d(0.01, 15.0), s_d(-5.0, 5.0);
  for (int i = 0; i < 400; ++i) {
    const double a = a_d(rng), b = b_d(rng), x = x_d(rng);
    const auto r = kummer_logderiv_check(a, b, x);
    EXPECT_TRUE(r.passed()) << a << " " << b << " " << x;
  }
  for (int i = 0; i < 200; ++i) {
    const double a = s_d(rng), b = b_d(rng), x = s_d(rng);
    EXPECT_TRUE(kummer_contiguous_check(a, b, x).passed()) << a << " " << b << " " << x;
  }
  EXPECT_TRUE(kummer_contiguous_check(1, 2, 1).passed());
  EXPECT_TRUE(kummer_contiguous_check(2, 5, 3).passed());
  EXPECT_TRUE(kummer_contiguous_check(1.5, 1.0, 2.0).passed());
  EXPECT_TRUE(kummer_contiguous_check(1.5, 1.5, 0.7).passed());
}

TEST(ExpRemainder, Values) {
  EXPECT_LT(rel_err(exp_remainder(1, 0, 1), kE - 1.0), 1e-14);
  EXPECT_LT(rel_err(exp_remainder(1, -1, 1), kE), 1e-14);
  EXPECT_LT(rel_err(exp_remainder(1, 3, 2.5), std::exp(2.5) - 1 - 2.5 - 3.125 - 2.5 * 2.5 * 2.5 / 6), 1e-13);
  EXPECT_LT(rel_err(exp_remainder(2, 1, 2), 8.38905609893065022723042746058), 1e-14);
  EXPECT_LT(rel_err(exp_remainder(1.5, -1.5, 0.5), 2.63097849391782765627871491509), 1e-13);
  EXPECT_EQ(exp_remainder(3, 0.5, 0), 0.0);
  EXPECT_THROW(exp_remainder(0.5, 0, 1), PreconditionError);
}

TEST(ExpRemainder, TuranBounds) {
  EXPECT_TRUE(exp_remainder_turan_bounds(1, 0, 1).passed());
  EXPECT_TRUE(exp_remainder_turan_bounds(2, 1, 2).passed());
  const auto z = exp_remainder_turan_bounds(1, 0, 0);
  EXPECT_TRUE(z.passed());
  EXPECT_NEAR(std::get<double>(z.margin), 0.0, 1e-15);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> e_d(1.0, 4.0), n_d(-2.0, 4.0), x_d(0.0, 10.0), s_d(0.05, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double eta = e_d(rng), nu = n_d(rng), x = x_d(rng), s = s_d(rng);
    EXPECT_TRUE(exp_remainder_turan_bounds(eta, nu, x).passed()) << eta << " " << nu << " " << x;
    if (nu + s >= -2.0) EXPECT_TRUE(exp_remainder_disc_wright(eta, nu, s, x).passed()) << eta << " " << nu << " " << s;
  }
}

TEST(SymmetricChain, Examples) {
  const auto r1 = symmetric_chain_check({BigRational(2)}, {BigRational(1)}, 0);
  EXPECT_TRUE(r1.satisfied);
  ASSERT_EQ(r1.ratios.size(), 2u);
  EXPECT_DOUBLE_EQ(r1.ratios[0], 0.5);
  EXPECT_TRUE(hyperterm_logconcavity({BigRational(2)}, {BigRational(1)}, 50));

  const auto r2 = symmetric_chain_check({}, {BigRational(3)}, 1);
  EXPECT_TRUE(r2.satisfied);
  EXPECT_EQ(r2.ratios.size(), 1u);

  const auto r3 = symmetric_chain_check({BigRational(1), BigRational(1)}, {BigRational(2), BigRational(2)}, 0);
  EXPECT_FALSE(r3.satisfied);
  ASSERT_TRUE(r3.violated_index.has_value());
  EXPECT_EQ(*r3.violated_index, 0u);
  EXPECT_DOUBLE_EQ(r3.ratios[0], 4.0);
  EXPECT_DOUBLE_EQ(r3.ratios[1], 2.0);

  EXPECT_TRUE(hyperterm_logconcavity({BigRational(3, 2), BigRational(5)}, {BigRational(3, 2), BigRational(5)}, 50));
  EXPECT_THROW(symmetric_chain_check({BigRational(1)}, {BigRational(1)}, 1), PreconditionError);
  EXPECT_THROW(symmetric_chain_check({}, {BigRational(1)}, 2), PreconditionError);
  EXPECT_EQ(elementary_symmetric({BigRational(1), BigRational(2), BigRational(3)}, 2), BigRational(11));
}

TEST(SymmetricChain, ChainImpliesLogConcave) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(1, 12), den(1, 4), qd(1, 3);
  int satisfied = 0;
  for (int i = 0; i < 400; ++i) {
    const std::size_t q = qd(rng);
    const std::size_t r = std::uniform_int_distribution<std::size_t>(0, q)(rng);
    std::vector<BigRational> a, b;
    for (std::size_t j = 0; j < q - r; ++j) a.emplace_back(num(rng), den(rng));
    for (std::size_t j = 0; j < q; ++j) b.emplace_back(num(rng), den(rng));
    if (!symmetric_chain_check(a, b, r).satisfied) continue;
    ++satisfied;
    EXPECT_TRUE(hyperterm_logconcavity(a, b, 50));
  }
  EXPECT_GT(satisfied, 50);
}

TEST(ParamDerivative, Values) {
  EXPECT_EQ(kummer_param_derivative(1, 1, 0), 0.0);
  EXPECT_LT(rel_err(kummer_param_derivative(1, 1, 1), 2.1653822153269363594), 1e-14);
  EXPECT_LT(rel_err(kummer_param_derivative(1.5, 2.5, 3), 6.15266052983740741099148220468), 1e-13);
  EXPECT_THROW(kummer_param_derivative(0.5, 1, 1), PreconditionError);
  const auto h = param_derivative_weights(BigRational(1), 4);
  EXPECT_EQ(h[0], BigRational(0));
  EXPECT_EQ(h[3], BigRational(11, 6));
  EXPECT_EQ(param_derivative_sequence(1.0).leading_zero_count(), 1u);
}

TEST(ParamDerivative, LogConcavity) {
  const auto r = param_derivative_logconcavity(BigRational(3, 2), 40);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(std::get<BigRational>(r.margin).sign(), 0);
  EXPECT_TRUE(param_derivative_logconcavity(BigRational(1), 40).passed());
  EXPECT_TRUE(param_derivative_logconcavity(BigRational(7), 40).passed());
}
