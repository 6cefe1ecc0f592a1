#include "reachpairs/checks.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "reachpairs/approx.hpp"
#include "reachpairs/errors.hpp"
#include "reachpairs/generators.hpp"
#include "reachpairs/oracle.hpp"
#include "reachpairs/structure.hpp"
#include "reachpairs/table_one.hpp"
#include "reachpairs/witness.hpp"

namespace reachpairs {
namespace {

using Failure = std::optional<std::string>;
using Probe = std::function<Failure(std::uint64_t)>;

template <class... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

// Runs probe(i) for first <= i <= last on `threads` workers. Returns the
// failure of the smallest failing i. Exceptions count as failures.
Failure sweep(std::uint64_t first, std::uint64_t last, unsigned threads, const Probe& probe) {
  if (first > last) return std::nullopt;
  std::atomic<std::uint64_t> next{first};
  std::atomic<std::uint64_t> first_bad{last + 1};
  std::mutex mutex;
  std::map<std::uint64_t, std::string> failures;

  auto worker = [&] {
    while (true) {
      const std::uint64_t i = next.fetch_add(1);
      if (i > last || i >= first_bad.load()) return;
      Failure failure;
      try {
        failure = probe(i);
      } catch (const std::exception& e) {
        failure = cat("index ", i, ": ", e.what());
      }
      if (!failure) continue;
      std::lock_guard lock(mutex);
      failures.emplace(i, std::move(*failure));
      std::uint64_t seen = first_bad.load();
      while (i < seen && !first_bad.compare_exchange_weak(seen, i)) {
      }
    }
  };

  const unsigned count = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failures.empty()) return std::nullopt;
  return failures.begin()->second;
}

CheckResult result(std::string name, const Failure& failure, std::string summary) {
  return {std::move(name), !failure.has_value(), failure ? *failure : std::move(summary)};
}

std::string range_text(std::uint64_t lo, std::uint64_t hi) { return cat("n = ", lo, "..", hi); }

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{seed, index};
  return std::mt19937_64(seq);
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_canonical(const WeightSet& set) {
  const auto parts = set.intervals();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].lo > parts[i].hi) return false;
    if (i > 0 && parts[i].lo <= parts[i - 1].hi + 1) return false;
  }
  return true;
}

}  // namespace

std::vector<CheckResult> check_table(WeightTables& tables, const CheckOptions& options) {
  const std::uint64_t max_n = std::max<std::uint64_t>(options.max_n, 1);
  tables.prepare(max_n + 1);
  const WeightTables& t = tables;
  const unsigned threads = options.threads;
  std::vector<CheckResult> out;

  const std::uint64_t table_max = std::min(max_n, kTableOneMaxN);
  out.push_back(result("table: weight sets and gaps match the reference table",
                       sweep(1, table_max, threads, [&](std::uint64_t n) -> Failure {
                         if (t.weight_set(n) != table_one_weight_set(n)) {
                           return cat("W(", n, ") = ", to_string(t.weight_set(n)));
                         }
                         if (t.gaps(n) != table_one_gaps(n)) {
                           return cat("gaps(", n, ") = ", to_string(t.gaps(n)));
                         }
                         return std::nullopt;
                       }),
                       range_text(1, table_max)));

  out.push_back(result("table: weight sets are canonical with min n, max n^2, [n, b(n)] inside",
                       sweep(1, max_n, threads, [&](std::uint64_t n) -> Failure {
                         const WeightSet w = t.weight_set(n);
                         const Weight b = t.initial_interval_end(n);
                         if (!is_canonical(w)) return cat("W(", n, ") is not canonical");
                         if (w.min() != n || w.max() != n * n) {
                           return cat("W(", n, ") has wrong extremes");
                         }
                         const Interval first = w.intervals().front();
                         if (first.lo != n || first.hi != b) {
                           return cat("first interval of W(", n, ") is [", first.lo, ", ",
                                      first.hi, "], b = ", b);
                         }
                         if (w.contains(b + 1) && b + 1 <= n * n) {
                           return cat("b(", n, ") + 1 is in W(", n, ")");
                         }
                         return std::nullopt;
                       }),
                       range_text(1, max_n)));

  out.push_back(result("table: gap laws near n^2",
                       sweep(3, max_n, threads, [&](std::uint64_t n) -> Failure {
                         const WeightSet w = t.weight_set(n);
                         if (w.intersects(n * n - n + 2, n * n - 1)) {
                           return cat("W(", n, ") meets [n^2-n+2, n^2-1]");
                         }
                         if (n >= 5 && w.intersects(n * n - 2 * n + 5, n * n - n)) {
                           return cat("W(", n, ") meets [n^2-2n+5, n^2-n]");
                         }
                         return std::nullopt;
                       }),
                       range_text(3, max_n)));

  out.push_back(result("table: b(n) >= ceil(3n^2/4) for n != 7, b(7) = 35",
                       sweep(1, max_n, threads, [&](std::uint64_t n) -> Failure {
                         const Weight b = t.initial_interval_end(n);
                         if (n == 7) return b == 35 ? Failure{} : cat("b(7) = ", b);
                         if (4 * b < 3 * n * n) return cat("b(", n, ") = ", b);
                         return std::nullopt;
                       }),
                       range_text(1, max_n)));

  // b(n) + m <= b(n + m) for all m follows from, and implies, the m = 1 case.
  out.push_back(result("table: b(n) + m <= b(n + m)",
                       sweep(1, max_n - 1, threads, [&](std::uint64_t n) -> Failure {
                         if (t.initial_interval_end(n) + 1 > t.initial_interval_end(n + 1)) {
                           return cat("b(", n, ") + 1 > b(", n + 1, ")");
                         }
                         return std::nullopt;
                       }),
                       range_text(1, max_n)));

  out.push_back(result("table: n+1 <= b(n+1) - b(n) <= 2n+1 for n >= 8",
                       sweep(8, max_n, threads, [&](std::uint64_t n) -> Failure {
                         const Weight step = t.initial_interval_end(n + 1) - t.initial_interval_end(n);
                         if (step < n + 1 || step > 2 * n + 1) {
                           return cat("b(", n + 1, ") - b(", n, ") = ", step);
                         }
                         return std::nullopt;
                       }),
                       range_text(8, max_n)));

  out.push_back(result("table: l(n) < b(n) < l(n+1) for n >= 4",
                       sweep(4, max_n, threads, [&](std::uint64_t n) -> Failure {
                         const Weight b = t.initial_interval_end(n);
                         if (!(t.threshold(n) < b && b < t.threshold(n + 1))) {
                           return cat("b(", n, ") = ", b, " outside (l(n), l(n+1))");
                         }
                         return std::nullopt;
                       }),
                       range_text(4, max_n)));

  out.push_back(result("table: sqrt(n) <= zeta(n) < sqrt(2n), equality only at 16",
                       sweep(12, max_n, threads, [&](std::uint64_t n) -> Failure {
                         const std::uint64_t z = t.recursion_index(n);
                         if (z * z < n || z * z >= 2 * n || (z * z == n && n != 16)) {
                           return cat("zeta(", n, ") = ", z);
                         }
                         return std::nullopt;
                       }),
                       range_text(12, max_n)));

  out.push_back(result("table: zeta(n) - floor(sqrt(n)) < n^(1/4)",
                       sweep(3, max_n, threads, [&](std::uint64_t n) -> Failure {
                         const std::uint64_t z = t.recursion_index(n);
                         const double excess = static_cast<double>(z) - static_cast<double>(isqrt(n));
                         if (excess >= std::pow(static_cast<double>(n), 0.25)) {
                           return cat("zeta(", n, ") = ", z);
                         }
                         return std::nullopt;
                       }),
                       range_text(3, max_n)));

  out.push_back(result("table: n^2 - b(n) < (1 + n^(-1/4)) n^(3/2) for n >= 9",
                       sweep(9, max_n, threads, [&](std::uint64_t n) -> Failure {
                         const double x = static_cast<double>(n);
                         const double deficit = static_cast<double>(n * n - t.initial_interval_end(n));
                         if (deficit >= (1 + std::pow(x, -0.25)) * std::pow(x, 1.5)) {
                           return cat("n^2 - b(n) = ", deficit, " at n = ", n);
                         }
                         return std::nullopt;
                       }),
                       range_text(9, max_n)));

  out.push_back(result("table: |n - b(zeta(n))| <= zeta(n) - 3 for n >= 192",
                       sweep(192, max_n, threads, [&](std::uint64_t n) -> Failure {
                         const std::uint64_t z = t.recursion_index(n);
                         const Weight bz = t.initial_interval_end(z);
                         const Weight diff = bz > n ? bz - n : n - bz;
                         if (diff + 3 > z) return cat("|n - b(zeta)| = ", diff, " at n = ", n);
                         return std::nullopt;
                       }),
                       range_text(192, max_n)));

  {
    Failure failure;
    const Weight at_eight = tables.recursive_formula_value(8);
    if (at_eight != 47 || tables.initial_interval_end(8) != 52) {
      failure = cat("formula at 8 gives ", at_eight, ", b(8) = ", tables.initial_interval_end(8));
    }
    out.push_back(result("table: formula at n = 8 gives 47 and is overridden by 52", failure,
                         "47 -> 52"));
  }

  const std::uint64_t full_max = std::min<std::uint64_t>(max_n, 200);
  {
    const auto full = weight_sets_by_full_recursion(full_max);
    out.push_back(result("table: full and fast recursions agree",
                         sweep(1, full_max, threads, [&](std::uint64_t n) -> Failure {
                           if (full[n] != t.weight_set(n)) return cat("W(", n, ") differs");
                           return std::nullopt;
                         }),
                         range_text(1, full_max)));
  }

  out.push_back(result("table: diagonal-free form is a shift by n",
                       sweep(1, full_max, threads, [&](std::uint64_t n) -> Failure {
                         WeightTables local;
                         const auto form = local.without_diagonal(n);
                         if (form.weights != t.weight_set(n).shifted_down(n) ||
                             form.initial_interval_end + n != t.initial_interval_end(n)) {
                           return cat("S(", n, ") mismatch");
                         }
                         return std::nullopt;
                       }),
                       range_text(1, full_max)));
  return out;
}

std::vector<CheckResult> check_bounds(WeightTables& tables, const CheckOptions& options) {
  const std::uint64_t max_n = std::max<std::uint64_t>(options.max_n, 3);
  tables.prepare(max_n);
  const WeightTables& t = tables;
  const unsigned threads = options.threads;
  std::vector<CheckResult> out;

  {
    std::vector<double> residual(max_n + 1, 0.0);
    const auto failure = sweep(3, max_n, threads, [&](std::uint64_t n) -> Failure {
      residual[n] = std::abs(static_cast<double>(t.recursion_index(n)) -
                             zeta_estimate(static_cast<double>(n)));
      if (residual[n] >= kZetaEstimateBound) return cat("|zeta - r| = ", residual[n], " at n = ", n);
      return std::nullopt;
    });
    const auto worst = std::max_element(residual.begin(), residual.end());
    out.push_back(result("bounds: |zeta(n) - r(n)| < 1.985", failure,
                         cat(range_text(3, max_n), ", max ", *worst, " at n = ",
                             worst - residual.begin())));
  }

  out.push_back(result("bounds: |b(n) - g(n)| < 2n",
                       sweep(3, max_n, threads, [&](std::uint64_t n) -> Failure {
                         const double diff = std::abs(static_cast<double>(t.initial_interval_end(n)) -
                                                      b_estimate(n));
                         if (diff >= kBEstimateFactor * static_cast<double>(n)) {
                           return cat("|b - g| = ", diff, " at n = ", n);
                         }
                         return std::nullopt;
                       }),
                       range_text(3, max_n)));

  const std::uint64_t count_max = std::min<std::uint64_t>(max_n, 2000);
  out.push_back(result("bounds: ||W(n)| - h(n)| < 3n for n >= 25",
                       sweep(kRecursiveCountMinN, count_max, threads, [&](std::uint64_t n) -> Failure {
                         const std::uint64_t z = t.recursion_index(n);
                         Weight h = t.initial_interval_end(n) - (n - 1);
                         for (std::uint64_t k = 1; k <= z; ++k) h += t.weight_count(k);
                         const double diff = std::abs(static_cast<double>(t.weight_count(n)) -
                                                      static_cast<double>(h));
                         if (diff >= kRecursiveCountFactor * static_cast<double>(n)) {
                           return cat("||W| - h| = ", diff, " at n = ", n);
                         }
                         return std::nullopt;
                       }),
                       range_text(kRecursiveCountMinN, count_max)));

  out.push_back(result("bounds: ||W(n)| - w_bar(n)| < 30n for n >= 5",
                       sweep(5, count_max, threads, [&](std::uint64_t n) -> Failure {
                         const double x = static_cast<double>(n);
                         const double diff =
                             std::abs(static_cast<double>(t.weight_count(n)) - weight_count_estimate(x));
                         if (diff >= kCountEstimateFactor * x) {
                           return cat("||W| - w_bar| = ", diff, " at n = ", n);
                         }
                         return std::nullopt;
                       }),
                       range_text(5, count_max)));

  out.push_back(result("bounds: r(n) = sqrt(n) + (r(sqrt(n)) - 1)/2 for n >= 9",
                       sweep(9, max_n, threads, [&](std::uint64_t n) -> Failure {
                         const double x = static_cast<double>(n);
                         const double lhs = zeta_estimate(x);
                         const double root = std::sqrt(x);
                         const double rhs = root + (zeta_estimate(root) - 1) / 2;
                         if (std::abs(lhs - rhs) > 1e-9 * std::abs(lhs)) {
                           return cat("r(", n, ") = ", lhs, ", right side ", rhs);
                         }
                         return std::nullopt;
                       }),
                       range_text(9, max_n)));

  out.push_back(result("bounds: coefficient sums are exact for m <= 20",
                       sweep(1, 20, threads, [&](std::uint64_t m) -> Failure {
                         if (!coefficient_identity_holds(static_cast<int>(m))) {
                           return cat("identity fails at m = ", m);
                         }
                         return std::nullopt;
                       }),
                       "m = 1..20"));

  {
    Failure failure;
    for (int i = 1; i < 100 && !failure; ++i) {
      const double x = i / 100.0;
      if (weight_count_series(x) >= 0) failure = cat("omega(", x, ") >= 0");
    }
    if (!failure && std::abs(weight_count_series(1.0)) > 1e-12) {
      failure = cat("omega(1) = ", weight_count_series(1.0));
    }
    double previous = weight_count_series(1.0);
    for (double x = 1.01; x <= 1e4 && !failure; x *= 1.01) {
      const double value = weight_count_series(x);
      if (value <= previous) failure = cat("omega not increasing at ", x);
      previous = value;
    }
    out.push_back(result("bounds: omega < 0 on (0,1), omega(1) = 0, increasing after 1", failure,
                         "sampled"));
  }

  out.push_back(result("bounds: |w_bar(x) - omega(x)| < x/3 for x >= 25",
                       sweep(25, std::max<std::uint64_t>(max_n, 25) + options.random_cases, threads,
                             [&](std::uint64_t i) -> Failure {
                               double x = static_cast<double>(i);
                               if (i > std::max<std::uint64_t>(max_n, 25)) {
                                 auto rng = case_rng(options.seed, i);
                                 x = std::uniform_real_distribution<double>(25.0, 1e12)(rng);
                               }
                               const double diff =
                                   std::abs(weight_count_estimate(x) - weight_count_series(x));
                               if (diff >= x / 3) return cat("difference ", diff, " at x = ", x);
                               return std::nullopt;
                             }),
                       cat("integers 25..", std::max<std::uint64_t>(max_n, 25), " and ",
                           options.random_cases, " random x")));

  {
    std::vector<double> residual(100, 0.0);
    const auto failure = sweep(0, 99, threads, [&](std::uint64_t i) -> Failure {
      auto rng = case_rng(options.seed, i);
      const double x = std::uniform_real_distribution<double>(9.0, 1e6)(rng);
      const double lhs = weight_count_series(x);
      const double rhs = x * x - std::pow(x, 1.5) + weight_count_series_integral(0.0, std::sqrt(x));
      residual[i] = std::abs(lhs - rhs) / std::abs(lhs);
      return std::nullopt;
    });
    const double worst = *std::max_element(residual.begin(), residual.end());
    const std::string summary = cat("max relative residual ", worst, " over 100 points in [9, 1e6]");
    out.push_back(result("bounds: omega(x) = x^2 - x^(3/2) + integral of omega over [0, sqrt x]",
                         failure ? failure : worst > 1e-6 ? Failure(summary) : std::nullopt,
                         summary));
  }
  return out;
}

std::vector<CheckResult> check_witness(WeightTables& tables, const CheckOptions& options) {
  const std::uint64_t max_n = std::max<std::uint64_t>(options.max_n, 1);
  constexpr std::uint64_t kExhaustiveMaxN = 60;
  constexpr std::size_t kSamplesPerN = 256;
  tables.prepare(std::max<std::uint64_t>(max_n, 3));
  const WeightTables& t = tables;
  const unsigned threads = options.threads;
  std::vector<CheckResult> out;

  // Weights to try for n: all of [n, n^2] up to the exhaustive bound, then
  // every interval end point and a random sample.
  auto candidates = [&](std::uint64_t n) {
    std::vector<Weight> ks;
    if (n <= kExhaustiveMaxN) {
      for (Weight k = n; k <= n * n; ++k) ks.push_back(k);
      return ks;
    }
    const WeightSet members = t.weight_set(n);
    for (const auto& iv : members.intervals()) {
      ks.push_back(iv.lo);
      ks.push_back(iv.hi);
      if (iv.hi + 1 <= n * n) ks.push_back(iv.hi + 1);
    }
    auto rng = case_rng(options.seed, n);
    std::uniform_int_distribution<Weight> pick(n, n * n);
    for (std::size_t i = 0; i < kSamplesPerN; ++i) ks.push_back(pick(rng));
    return ks;
  };

  out.push_back(result(
      "witness: every achievable weight has a verified witness, every gap is rejected",
      sweep(1, max_n, threads, [&](std::uint64_t n) -> Failure {
        for (Weight k : candidates(n)) {
          const bool member = t.contains(n, k);
          try {
            const Witness w = build_witness(t, n, k);
            if (!member) return cat("gap ", k, " accepted for n = ", n);
            if (!verify_witness(n, k, w.graph)) return cat("witness (", n, ", ", k, ") fails");
            if (replay(w.trace) != w.graph) return cat("replay differs for (", n, ", ", k, ")");
            if (replay(trace_from_json(to_json(w.trace))) != w.graph) {
              return cat("trace JSON round trip differs for (", n, ", ", k, ")");
            }
          } catch (const NotAchievable&) {
            if (member) return cat("achievable ", k, " rejected for n = ", n);
          }
        }
        return std::nullopt;
      }),
      cat(range_text(1, max_n), ", exhaustive up to ", std::min(max_n, kExhaustiveMaxN))));

  out.push_back(result("witness: a mother vertices over weight w on m vertices weigh (a+m)a + w",
                       sweep(0, options.random_cases - 1, threads, [&](std::uint64_t i) -> Failure {
                         auto rng = case_rng(options.seed, i);
                         const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
                         const std::size_t a = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
                         const double p = std::uniform_real_distribution<double>(0.0, 0.3)(rng);
                         const Digraph base = random_digraph(m, p, rng);
                         const Weight expected = (a + m) * a + weight(base);
                         const Weight actual = weight(add_mother_vertices(base, a));
                         if (actual != expected) {
                           return cat("case ", i, ": weight ", actual, ", expected ", expected);
                         }
                         return std::nullopt;
                       }),
                       cat(options.random_cases, " random cases")));
  return out;
}

std::vector<CheckResult> check_oracle(WeightTables& tables, const CheckOptions& options) {
  const std::uint64_t oracle_max = std::min<std::uint64_t>(std::max<std::uint64_t>(options.max_n, 1),
                                                           kOracleMaxN);
  tables.prepare(std::max<std::uint64_t>(oracle_max, 3));
  const WeightTables& t = tables;
  const unsigned threads = options.threads;
  const std::uint64_t cases = std::max<std::size_t>(options.random_cases, 1);
  std::vector<CheckResult> out;

  out.push_back(result("oracle: brute force equals the recursion",
                       sweep(1, oracle_max, threads, [&](std::uint64_t n) -> Failure {
                         const WeightSet brute = oracle_weight_set(n);
                         if (brute != t.weight_set(n)) {
                           return cat("n = ", n, ": brute force ", to_string(brute));
                         }
                         return std::nullopt;
                       }),
                       range_text(1, oracle_max)));

  auto random_cases = [&](const char* name, std::function<Failure(std::mt19937_64&)> probe) {
    out.push_back(result(name,
                         sweep(0, cases - 1, threads, [&](std::uint64_t i) -> Failure {
                           auto rng = case_rng(options.seed, i);
                           auto failure = probe(rng);
                           if (failure) return cat("case ", i, ": ", *failure);
                           return std::nullopt;
                         }),
                         cat(cases, " random cases")));
  };

  random_cases("oracle: clique poset weight equals closure weight, expansion is transitive",
               [](std::mt19937_64& rng) -> Failure {
                 const auto n = std::uniform_int_distribution<std::size_t>(1, kOracleMaxN)(rng);
                 const CliquePoset poset = random_clique_poset(n, rng);
                 if (!poset.is_valid()) return "invalid poset";
                 const Digraph g = poset.expand();
                 if (!is_transitive(g)) return "expansion not transitive";
                 if (poset.weight() != weight(g)) return cat("poset weight ", poset.weight());
                 return std::nullopt;
               });

  random_cases("structure: closure is idempotent, matches Floyd-Warshall, n <= w <= n^2",
               [](std::mt19937_64& rng) -> Failure {
                 const auto n = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
                 const double p = std::uniform_real_distribution<double>(0.0, 0.2)(rng);
                 const Digraph g = random_digraph(n, p, rng);
                 const Digraph closed = transitive_closure(g);
                 if (transitive_closure(closed) != closed) return "closure not idempotent";
                 if (n <= 16 && transitive_closure_naive(g) != closed) return "naive closure differs";
                 const Weight w = weight(g);
                 if (w != weight(closed)) return "closure changes weight";
                 if (w < n || w > n * n) return cat("weight ", w, " out of range");
                 return std::nullopt;
               });

  random_cases("structure: clique chain partition, cross edges all-or-nothing, w <= n(n+m)/2",
               [](std::mt19937_64& rng) -> Failure {
                 const auto n = std::uniform_int_distribution<std::size_t>(1, 24)(rng);
                 const Digraph g = random_transitive_digraph(n, rng);
                 const CliqueChain chain = clique_chain_partition(g);
                 std::vector<std::size_t> block_of(n, chain.size());
                 std::size_t largest = 0;
                 for (std::size_t i = 0; i < chain.size(); ++i) {
                   largest = std::max(largest, chain.blocks[i].size());
                   for (Vertex v : chain.blocks[i]) {
                     if (block_of[v] != chain.size()) return "vertex in two blocks";
                     block_of[v] = i;
                   }
                 }
                 if (std::count(block_of.begin(), block_of.end(), chain.size()) != 0) {
                   return "vertex in no block";
                 }
                 for (std::size_t i = 0; i < chain.size(); ++i) {
                   for (std::size_t j = 0; j < chain.size(); ++j) {
                     for (Vertex u : chain.blocks[i]) {
                       for (Vertex v : chain.blocks[j]) {
                         if (u == v) continue;
                         const bool edge = g.has_edge(u, v);
                         if (i == j && !edge) return "block is not a clique";
                         if (i > j && edge) return "edge to an earlier block";
                         if (i < j && edge != chain.full[i][j]) return "partial cross edges";
                       }
                     }
                   }
                 }
                 // Any two cliques: cross edges in each direction all or none.
                 const auto components = strongly_connected_components(g);
                 for (const auto& x : components) {
                   for (const auto& y : components) {
                     if (&x == &y) continue;
                     std::size_t edges = 0;
                     for (Vertex u : x) {
                       for (Vertex v : y) edges += g.has_edge(u, v);
                     }
                     if (edges != 0 && edges != x.size() * y.size()) {
                       return "cliques with partial cross edges";
                     }
                   }
                 }
                 if (largest_clique(g).size() != largest) return "largest clique size mismatch";
                 if (2 * weight(g) > n * (n + largest)) return "weight above n(n+m)/2";
                 return std::nullopt;
               });

  random_cases("structure: mother-form rearrangement keeps weight and adds a mother vertex",
               [](std::mt19937_64& rng) -> Failure {
                 // A big clique somewhere in a random poset, then rejection on the
                 // weight threshold.
                 for (int attempt = 0; attempt < 1000; ++attempt) {
                   const auto n = std::uniform_int_distribution<std::size_t>(2, 20)(rng);
                   const auto big = std::uniform_int_distribution<std::size_t>(n / 2 + 1, n)(rng);
                   CliquePoset poset = random_clique_poset(n - big + 1, rng);
                   const auto at = std::uniform_int_distribution<std::size_t>(
                       0, poset.block_sizes.size() - 1)(rng);
                   poset.block_sizes[at] += static_cast<std::uint32_t>(big - 1);
                   const Digraph g = poset.expand();
                   const Weight w = weight(g);
                   const MotherForm general = mother_form_construction(g);
                   if (weight(general.graph) != w) return "construction changed the weight";
                   if (4 * w <= 3 * n * n) continue;
                   const MotherForm form = rearrange_to_mother_form(g);
                   if (weight(form.graph) != w) return "rearrangement changed the weight";
                   if (!is_transitive(form.graph)) return "rearrangement not transitive";
                   if (mother_vertices(form.graph).empty()) return "no mother vertex";
                   return std::nullopt;
                 }
                 return "no input above the weight threshold";
               });

  random_cases("structure: open sets and preorder both count the weight",
               [](std::mt19937_64& rng) -> Failure {
                 const auto n = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
                 const double p = std::uniform_real_distribution<double>(0.0, 0.15)(rng);
                 const Digraph g = random_digraph(n, p, rng);
                 std::size_t total = 0;
                 for (const auto& open : minimal_open_sets(g)) total += open.size();
                 const Weight w = weight(g);
                 if (total != w || to_preorder(g).size() != w) return "counts differ from weight";
                 return std::nullopt;
               });
  return out;
}

}  // namespace reachpairs
