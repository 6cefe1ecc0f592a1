#pragma once

// Closed-form estimators for zeta(n), b(n) and |W(n)|, and the report that
// checks them against the exact values.

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "reachpairs/tables.hpp"

namespace reachpairs {

// Error bounds the estimators are proven to satisfy.
inline constexpr double kZetaEstimateBound = 1.985;  // |zeta - r| < 1.985, n >= 3
inline constexpr double kBEstimateFactor = 2.0;      // |b - g| < 2n, n >= 3
inline constexpr double kRecursiveCountFactor = 3.0; // ||W| - h| < 3n, n >= 25
inline constexpr std::uint64_t kRecursiveCountMinN = 25;
inline constexpr double kCountEstimateFactor = 30.0; // ||W| - w_bar| < 30n

// N = floor(log2 log5 x) + 1, i.e. the number of d >= 0 with x >= 5^(2^d).
// The integer overload compares against exact powers. Requires x >= 3.
int truncation_level(std::uint64_t n);
int truncation_level(double x);

// r(x) = sum_{j=1..N} x^(1/2^j) / 2^(j-1) - (2^(N-1) - 1) / 2^(N-1).
// Equals 1 when N = 0 (3 <= x < 5).
double zeta_estimate(double x);

// g(n) = n^2 - r(n) n + n.
double b_estimate(std::uint64_t n);

// h(n) = b(n) - (n - 1) + sum_{k=1..zeta(n)} |W(k)|.
Weight weight_count_recursive(WeightTables& tables, std::uint64_t n);

// c_k = 2^k / prod_{i=1..k} (2^i + 1), k >= 1.
double series_coefficient(int k);

// omega(x) = x^2 - sum_{k>=1} c_k x^(1 + 1/2^k), x >= 0. The tail is cut
// once a term drops below 1e-12 max(1, x^2).
double weight_count_series(double x);

// omega_bar(x): the same series cut after N(x) terms. Requires x >= 5 so
// that N >= 1; throws PreconditionError otherwise.
double weight_count_estimate(double x);

// Integral of omega over [a, b] from the term-wise antiderivative.
// Requires 0 <= a <= b.
double weight_count_series_integral(double a, double b);

// Exact check, in rational arithmetic, that sum_{k=1..m} c_k equals
// 1 - 1 / prod_{i=1..m} (2^i + 1).
bool coefficient_identity_holds(int m);

namespace detail {

// x^2 - sum_k coeffs[k-1] x^(1 + 1/2^k) with the tail cut as above.
double power_series_value(double x, std::span<const double> coeffs);
// Antiderivative of power_series_value, evaluated between a and b.
double power_series_integral(double a, double b, std::span<const double> coeffs);

}  // namespace detail

struct ApproxReport {
  std::uint64_t n = 0;
  std::uint64_t zeta = 0;
  double r = 0;
  Weight b = 0;
  double g = 0;
  std::optional<Weight> wsize;
  std::optional<Weight> h;
  std::optional<double> omega_bar;  // absent for n < 5

  double residual_zeta_r = 0;
  double residual_b_g = 0;
  std::optional<double> residual_wsize_h;
  std::optional<double> residual_wsize_omega_bar;

  bool pass_zeta_r = false;
  bool pass_b_g = false;
  std::optional<bool> pass_wsize_h;          // n >= 25 with wsize
  std::optional<bool> pass_wsize_omega_bar;  // n >= 5 with wsize

  // Every applicable bound holds.
  bool all_pass() const;
};

// Residuals and bound checks at n >= 3. |W(n)| and h(n) are only computed
// when with_weight_count is set.
ApproxReport bound_report(WeightTables& tables, std::uint64_t n,
                          bool with_weight_count);

// Flat JSON object; absent optionals become null.
std::string to_json(const ApproxReport& report);

}  // namespace reachpairs
