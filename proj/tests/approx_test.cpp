#include <gtest/gtest.h>

#include <cmath>
#include <json.hpp>
#include <random>
#include <vector>

#include "reachpairs/approx.hpp"
#include "reachpairs/errors.hpp"

namespace reachpairs {
namespace {

// Simpson's rule, used to check the term-wise antiderivative.
template <class F>
double simpson(F f, double a, double b, int steps) {
  const double h = (b - a) / steps;
  double sum = f(a) + f(b);
  for (int i = 1; i < steps; ++i) sum += f(a + i * h) * (i % 2 ? 4 : 2);
  return sum * h / 3;
}

TEST(Approx, TruncationLevel) {
  EXPECT_EQ(truncation_level(std::uint64_t{24}), 1);
  EXPECT_EQ(truncation_level(std::uint64_t{25}), 2);
  EXPECT_EQ(truncation_level(std::uint64_t{624}), 2);
  EXPECT_EQ(truncation_level(std::uint64_t{625}), 3);
  EXPECT_EQ(truncation_level(std::uint64_t{3}), 0);
  EXPECT_EQ(truncation_level(std::uint64_t{390624}), 3);
  EXPECT_EQ(truncation_level(std::uint64_t{390625}), 4);
  EXPECT_EQ(truncation_level(25.0), 2);
  EXPECT_EQ(truncation_level(24.999), 1);
}

TEST(Approx, ZetaEstimate) {
  EXPECT_NEAR(zeta_estimate(25), 5 + 0.5 * std::pow(25.0, 0.25) - 0.5, 1e-12);
  EXPECT_NEAR(zeta_estimate(25), 5.6180, 1e-4);
  EXPECT_DOUBLE_EQ(zeta_estimate(9), 3.0);
  EXPECT_DOUBLE_EQ(zeta_estimate(4), 1.0);
  EXPECT_DOUBLE_EQ(zeta_estimate(16), 4.0);
}

TEST(Approx, BEstimate) {
  EXPECT_NEAR(b_estimate(25), 509.55, 0.01);
  EXPECT_DOUBLE_EQ(b_estimate(9), 63.0);
  EXPECT_DOUBLE_EQ(b_estimate(3), 9.0);
}

TEST(Approx, RecursiveCount) {
  WeightTables t;
  EXPECT_EQ(weight_count_recursive(t, 25), 542u);
  EXPECT_EQ(weight_count_recursive(t, 3), 6u);
}

TEST(Approx, SeriesValues) {
  EXPECT_DOUBLE_EQ(weight_count_series(0), 0.0);
  EXPECT_NEAR(weight_count_series(1), 0.0, 1e-12);
  EXPECT_NEAR(weight_count_estimate(25),
              625 - (2.0 / 3) * 125 - (4.0 / 15) * std::pow(25.0, 1.25), 1e-9);
  EXPECT_NEAR(weight_count_estimate(25), 526.76, 0.005);
  EXPECT_NEAR(weight_count_estimate(5000), 24752227, 0.5);
  EXPECT_THROW(weight_count_estimate(4.9), PreconditionError);
  EXPECT_LT(std::abs(weight_count_estimate(25) - weight_count_series(25)), 25.0 / 3);
}

TEST(Approx, SeriesAgainstDirectSum) {
  for (double x : {0.3, 2.0, 25.0, 1e3, 1e6}) {
    long double sum = static_cast<long double>(x) * x;
    long double c = 1;
    for (int k = 1; k <= 60; ++k) {
      c *= 2.0L / (std::pow(2.0L, k) + 1);
      sum -= c * std::pow(static_cast<long double>(x), 1 + std::pow(2.0L, -k));
    }
    EXPECT_NEAR(weight_count_series(x), static_cast<double>(sum), 1e-9 * std::max(1.0, x * x));
  }
  EXPECT_DOUBLE_EQ(series_coefficient(1), 2.0 / 3);
  EXPECT_DOUBLE_EQ(series_coefficient(2), 4.0 / 15);
  EXPECT_DOUBLE_EQ(series_coefficient(3), 8.0 / 135);
}

TEST(Approx, SeriesShape) {
  for (int i = 1; i < 100; ++i) EXPECT_LT(weight_count_series(i / 100.0), 0.0);
  double previous = weight_count_series(1);
  for (double x = 1.001; x < 1e5; x *= 1.003) {
    const double value = weight_count_series(x);
    ASSERT_GT(value, previous) << x;
    previous = value;
  }
}

TEST(Approx, IntegralMatchesQuadrature) {
  EXPECT_DOUBLE_EQ(weight_count_series_integral(0, 0), 0.0);
  const double unit = weight_count_series_integral(0, 1);
  EXPECT_LT(unit, 0.0);
  EXPECT_LE(std::abs(unit), 1.0);
  EXPECT_NEAR(unit, simpson(weight_count_series, 0, 1, 20000), 1e-6);
  EXPECT_NEAR(weight_count_series_integral(2, 30),
              simpson(weight_count_series, 2, 30, 20000), 1e-6 * 9000);
}

TEST(Approx, CoefficientIdentityExact) {
  for (int m = 1; m <= 20; ++m) EXPECT_TRUE(coefficient_identity_holds(m)) << m;
  double sum = 0;
  for (int k = 1; k <= 3; ++k) sum += series_coefficient(k);
  EXPECT_NEAR(sum, 134.0 / 135, 1e-15);
}

TEST(Approx, FunctionalEquation) {
  for (std::uint64_t n = 9; n <= 200000; n += (n < 1000 ? 1 : 97)) {
    const double x = static_cast<double>(n);
    const double rhs = std::sqrt(x) + (zeta_estimate(std::sqrt(x)) - 1) / 2;
    ASSERT_NEAR(zeta_estimate(x), rhs, 1e-9 * zeta_estimate(x)) << n;
  }
}

TEST(Approx, TruncationErrorBound) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::exp(std::uniform_real_distribution<double>(std::log(25.0), std::log(1e14))(rng));
    ASSERT_LT(std::abs(weight_count_estimate(x) - weight_count_series(x)), x / 3) << x;
  }
}

// The self-similarity identity omega(x) = x^2 - x^(3/2) + int_0^sqrt(x) omega
// forces c_{k+1} = c_k 2^k / (2^(k+1) + 1). The integrator satisfies it for
// those coefficients; the shipped coefficients are checked by the acceptance
// suite.
TEST(Approx, IntegratorSatisfiesSelfSimilarityForMatchingCoefficients) {
  std::vector<double> coeffs;
  double c = 2.0 / 3;
  for (int k = 1; k <= 60; ++k) {
    coeffs.push_back(c);
    c *= std::pow(2.0, k) / (std::pow(2.0, k + 1) + 1);
  }
  std::mt19937_64 rng(32);
  for (int i = 0; i < 100; ++i) {
    const double x = std::uniform_real_distribution<double>(9, 1e6)(rng);
    const double lhs = detail::power_series_value(x, coeffs);
    const double rhs = x * x - std::pow(x, 1.5) + detail::power_series_integral(0, std::sqrt(x), coeffs);
    ASSERT_NEAR(lhs, rhs, 1e-9 * std::abs(lhs)) << x;
  }
}

TEST(Approx, BoundReport) {
  WeightTables t;
  const auto r25 = bound_report(t, 25, true);
  EXPECT_EQ(r25.zeta, 6u);
  EXPECT_NEAR(r25.residual_zeta_r, 0.382, 1e-3);
  EXPECT_EQ(r25.b, 503u);
  EXPECT_NEAR(r25.residual_b_g, 6.55, 0.01);
  EXPECT_EQ(r25.h, 542u);
  EXPECT_EQ(r25.wsize, 518u);
  EXPECT_TRUE(r25.all_pass());

  const auto r16 = bound_report(t, 16, false);
  EXPECT_DOUBLE_EQ(r16.residual_zeta_r, 0.0);
  EXPECT_FALSE(r16.wsize.has_value());
  EXPECT_FALSE(r16.pass_wsize_h.has_value());

  const auto r5000 = bound_report(t, 5000, true);
  EXPECT_NEAR(*r5000.residual_wsize_omega_bar, 5533, 1.0);
  EXPECT_TRUE(r5000.all_pass());

  const auto j = nlohmann::json::parse(to_json(bound_report(t, 4, true)));
  EXPECT_TRUE(j.at("omega_bar").is_null());
  EXPECT_EQ(j.at("b").get<int>(), 13);
  EXPECT_THROW(bound_report(t, 2, false), PreconditionError);
}

TEST(Approx, SweepsTo20000) {
  WeightTables t;
  t.prepare(20000);
  double worst = 0;
  for (std::uint64_t n = 3; n <= 20000; ++n) {
    const auto r = bound_report(t, n, false);
    ASSERT_TRUE(r.pass_zeta_r) << n;
    ASSERT_TRUE(r.pass_b_g) << n;
    worst = std::max(worst, r.residual_zeta_r);
  }
  EXPECT_LT(worst, kZetaEstimateBound);
  EXPECT_GT(worst, 1.0);
}

}  // namespace
}  // namespace reachpairs
