#include "reachpairs/approx.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "reachpairs/errors.hpp"

namespace reachpairs {
namespace {

constexpr int kMaxSeriesTerms = 64;
constexpr double kSeriesTolerance = 1e-12;

const std::array<double, kMaxSeriesTerms>& coefficient_table() {
  static const std::array<double, kMaxSeriesTerms> table = [] {
    std::array<double, kMaxSeriesTerms> c{};
    double value = 1.0;
    for (int k = 1; k <= kMaxSeriesTerms; ++k) {
      value *= 2.0 / (std::ldexp(1.0, k) + 1.0);
      c[static_cast<std::size_t>(k - 1)] = value;
    }
    return c;
  }();
  return table;
}

void require_at_least_three(double x, const char* what) {
  if (!(x >= 3.0)) throw PreconditionError(std::string(what) + " requires n >= 3");
}

}  // namespace

int truncation_level(std::uint64_t n) {
  if (n < 3) throw PreconditionError("truncation level requires n >= 3");
  int level = 0;
  std::uint64_t threshold = 5;
  while (n >= threshold) {
    ++level;
    if (threshold > std::numeric_limits<std::uint64_t>::max() / threshold) break;
    threshold *= threshold;
  }
  return level;
}

int truncation_level(double x) {
  require_at_least_three(x, "truncation level");
  int level = 0;
  double threshold = 5.0;
  while (x >= threshold) {
    ++level;
    threshold *= threshold;
  }
  return level;
}

double zeta_estimate(double x) {
  const int levels = truncation_level(x);
  double sum = 0.0;
  for (int j = 1; j <= levels; ++j) {
    sum += std::pow(x, std::ldexp(1.0, -j)) * std::ldexp(1.0, 1 - j);
  }
  // - (2^(N-1) - 1) / 2^(N-1) = 2^(1-N) - 1
  return sum + std::ldexp(1.0, 1 - levels) - 1.0;
}

double b_estimate(std::uint64_t n) {
  require_at_least_three(static_cast<double>(n), "b_estimate");
  const auto x = static_cast<double>(n);
  return x * x - zeta_estimate(x) * x + x;
}

Weight weight_count_recursive(WeightTables& tables, std::uint64_t n) {
  if (n < 3) throw PreconditionError("weight_count_recursive requires n >= 3");
  const std::uint64_t z = tables.recursion_index(n);
  Weight total = tables.initial_interval_end(n) - (n - 1);
  for (std::uint64_t k = 1; k <= z; ++k) total += tables.weight_count(k);
  return total;
}

double series_coefficient(int k) {
  if (k < 1) throw PreconditionError("series coefficients start at k = 1");
  if (k > kMaxSeriesTerms) return 0.0;
  return coefficient_table()[static_cast<std::size_t>(k - 1)];
}

namespace detail {

double power_series_value(double x, std::span<const double> coeffs) {
  if (!(x >= 0.0)) throw PreconditionError("series argument must be non-negative");
  const double scale = std::max(1.0, x * x);
  double value = x * x;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double term = coeffs[i] * std::pow(x, 1.0 + std::ldexp(1.0, -static_cast<int>(i + 1)));
    value -= term;
    if (std::abs(term) < kSeriesTolerance * scale) break;
  }
  return value;
}

double power_series_integral(double a, double b, std::span<const double> coeffs) {
  if (!(a >= 0.0) || !(b >= a)) throw PreconditionError("integral requires 0 <= a <= b");
  auto antiderivative = [&](double x) {
    const double scale = std::max(1.0, x * x * x);
    double value = x * x * x / 3.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const double exponent = 2.0 + std::ldexp(1.0, -static_cast<int>(i + 1));
      const double term = coeffs[i] * std::pow(x, exponent) / exponent;
      value -= term;
      if (std::abs(term) < kSeriesTolerance * scale) break;
    }
    return value;
  };
  return antiderivative(b) - antiderivative(a);
}

}  // namespace detail

double weight_count_series(double x) {
  return detail::power_series_value(x, coefficient_table());
}

double weight_count_estimate(double x) {
  if (!(x >= 5.0)) {
    throw PreconditionError("weight_count_estimate requires x >= 5 (no correction terms below)");
  }
  const int levels = truncation_level(x);
  double value = x * x;
  for (int k = 1; k <= levels; ++k) {
    value -= series_coefficient(k) * std::pow(x, 1.0 + std::ldexp(1.0, -k));
  }
  return value;
}

double weight_count_series_integral(double a, double b) {
  return detail::power_series_integral(a, b, coefficient_table());
}

bool coefficient_identity_holds(int m) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  if (m < 1) throw PreconditionError("coefficient identity needs m >= 1");
  cpp_rational sum = 0;
  cpp_int product = 1;
  for (int k = 1; k <= m; ++k) {
    const cpp_int power = cpp_int(1) << k;
    product *= power + 1;
    sum += cpp_rational(power, product);
  }
  return sum == cpp_rational(1) - cpp_rational(cpp_int(1), product);
}

bool ApproxReport::all_pass() const {
  return pass_zeta_r && pass_b_g && pass_wsize_h.value_or(true) &&
         pass_wsize_omega_bar.value_or(true);
}

ApproxReport bound_report(WeightTables& tables, std::uint64_t n, bool with_weight_count) {
  if (n < 3) throw PreconditionError("bound_report requires n >= 3");
  const auto x = static_cast<double>(n);
  ApproxReport rep;
  rep.n = n;
  rep.zeta = tables.recursion_index(n);
  rep.r = zeta_estimate(x);
  rep.b = tables.initial_interval_end(n);
  rep.g = b_estimate(n);
  rep.residual_zeta_r = std::abs(static_cast<double>(rep.zeta) - rep.r);
  rep.residual_b_g = std::abs(static_cast<double>(rep.b) - rep.g);
  rep.pass_zeta_r = rep.residual_zeta_r < kZetaEstimateBound;
  rep.pass_b_g = rep.residual_b_g < kBEstimateFactor * x;
  if (n >= 5) rep.omega_bar = weight_count_estimate(x);

  if (with_weight_count) {
    rep.wsize = tables.weight_count(n);
    rep.h = weight_count_recursive(tables, n);
    rep.residual_wsize_h =
        std::abs(static_cast<double>(*rep.wsize) - static_cast<double>(*rep.h));
    if (n >= kRecursiveCountMinN) {
      rep.pass_wsize_h = *rep.residual_wsize_h < kRecursiveCountFactor * x;
    }
    if (rep.omega_bar) {
      rep.residual_wsize_omega_bar = std::abs(static_cast<double>(*rep.wsize) - *rep.omega_bar);
      rep.pass_wsize_omega_bar = *rep.residual_wsize_omega_bar < kCountEstimateFactor * x;
    }
  }
  return rep;
}

std::string to_json(const ApproxReport& report) {
  nlohmann::ordered_json j;
  auto opt = [](const auto& v) -> nlohmann::ordered_json {
    if (v) return *v;
    return nullptr;
  };
  j["n"] = report.n;
  j["zeta"] = report.zeta;
  j["r"] = report.r;
  j["b"] = report.b;
  j["g"] = report.g;
  j["wsize"] = opt(report.wsize);
  j["h"] = opt(report.h);
  j["omega_bar"] = opt(report.omega_bar);
  j["residual_zeta_r"] = report.residual_zeta_r;
  j["residual_b_g"] = report.residual_b_g;
  j["residual_wsize_h"] = opt(report.residual_wsize_h);
  j["residual_wsize_omega_bar"] = opt(report.residual_wsize_omega_bar);
  j["pass_zeta_r"] = report.pass_zeta_r;
  j["pass_b_g"] = report.pass_b_g;
  j["pass_wsize_h"] = opt(report.pass_wsize_h);
  j["pass_wsize_omega_bar"] = opt(report.pass_wsize_omega_bar);
  return j.dump();
}

}  // namespace reachpairs
