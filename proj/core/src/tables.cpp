#include "reachpairs/tables.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "reachpairs/errors.hpp"
#include "reachpairs/table_one.hpp"

namespace reachpairs {
namespace {

// W(n) for n <= 7 comes from the reference table; the recursion starts at 8.
constexpr std::uint64_t kBaseWeightSetMaxN = 7;
constexpr std::uint64_t kInitialBTable = 16;
constexpr std::uint64_t kInitialWTable = 12;

void check_vertex_count(std::uint64_t n) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  if (n > kMaxVertices) {
    throw PreconditionError("n = " + std::to_string(n) + " exceeds the supported maximum 2^31");
  }
}

[[noreturn]] void out_of_prepared_range(const char* what, std::uint64_t n) {
  throw std::out_of_range(std::string(what) + "(" + std::to_string(n) +
                          ") is outside the prepared range");
}

}  // namespace

WeightTables::WeightTables() : b_{0}, ell_{0}, w_{WeightSet{}} {
  grow_b_to(kInitialBTable);
  grow_w_to(kInitialWTable);
}

void WeightTables::grow_b_to(std::uint64_t z) {
  for (std::uint64_t i = b_.size(); i <= z; ++i) {
    Weight b;
    if (i == 1) {
      b = 1;
    } else if (i == 2) {
      b = 4;
    } else if (i == 8) {
      b = 52;  // the recursive formula gives 47 here
    } else {
      // l(i-1) > i, so the index of i is already in the table.
      const std::uint64_t idx = index_from_table(i);
      b = i * i - idx * i + b_[idx];
    }
    b_.push_back(b);
    ell_.push_back(b - i + 3);
  }
}

void WeightTables::grow_thresholds_past(std::uint64_t n) {
  while (ell_.back() <= n) grow_b_to(b_.size());
}

void WeightTables::grow_w_to(std::uint64_t n) {
  if (n < w_.size()) return;
  grow_b_to(n);
  for (std::uint64_t k = w_.size(); k <= n; ++k) w_.push_back(compute_weight_set(k));
}

std::uint64_t WeightTables::index_from_table(std::uint64_t n) const {
  // ell_ is strictly increasing from index 1 on.
  auto it = std::upper_bound(ell_.begin() + 1, ell_.end(), n);
  return static_cast<std::uint64_t>(it - ell_.begin()) - 1;
}

void WeightTables::check_range(std::uint64_t n) const {
  if (ell_.back() <= n) out_of_prepared_range("recursion_index", n);
}

void WeightTables::prepare(std::uint64_t max_n) {
  check_vertex_count(max_n);
  grow_b_to(std::max(max_n, kInitialBTable));
  grow_thresholds_past(max_n);
  if (max_n >= 3) grow_w_to(std::max(kInitialWTable, recursion_index(max_n)));
}

Weight WeightTables::initial_interval_end(std::uint64_t n) const {
  check_vertex_count(n);
  if (n < b_.size()) return b_[n];
  check_range(n);
  const std::uint64_t z = index_from_table(n);
  return n * n - z * n + b_[z];
}

Weight WeightTables::initial_interval_end(std::uint64_t n) {
  check_vertex_count(n);
  if (n >= b_.size()) grow_thresholds_past(n);
  return std::as_const(*this).initial_interval_end(n);
}

Weight WeightTables::threshold(std::uint64_t z) const {
  return initial_interval_end(z) - z + 3;
}

Weight WeightTables::threshold(std::uint64_t z) {
  return initial_interval_end(z) - z + 3;
}

std::uint64_t WeightTables::recursion_index(std::uint64_t n) const {
  if (n < 3) throw PreconditionError("recursion index requires n >= 3");
  check_vertex_count(n);
  check_range(n);
  return index_from_table(n);
}

std::uint64_t WeightTables::recursion_index(std::uint64_t n) {
  if (n < 3) throw PreconditionError("recursion index requires n >= 3");
  check_vertex_count(n);
  grow_thresholds_past(n);
  return index_from_table(n);
}

WeightSet WeightTables::compute_weight_set(std::uint64_t n) const {
  if (n <= kBaseWeightSetMaxN) return table_one_weight_set(n);
  const std::uint64_t z = recursion_index(n);
  if (z >= w_.size()) out_of_prepared_range("weight_set", n);

  std::vector<Interval> parts;
  std::size_t total = 2;
  for (std::uint64_t k = 1; k <= z; ++k) total += w_[k].interval_count();
  parts.reserve(total);
  parts.push_back({n, initial_interval_end(n)});
  // n - k mother vertices over a k-vertex digraph of weight c: n(n-k) + c.
  for (std::uint64_t k = 1; k <= z; ++k) {
    const Weight offset = n * (n - k);
    for (const auto& iv : w_[k].intervals()) parts.push_back({iv.lo + offset, iv.hi + offset});
  }
  parts.push_back({n * n, n * n});
  return WeightSet::from_intervals(std::move(parts));
}

WeightSet WeightTables::weight_set(std::uint64_t n) const {
  check_vertex_count(n);
  if (n < w_.size()) return w_[n];
  return compute_weight_set(n);
}

WeightSet WeightTables::weight_set(std::uint64_t n) {
  check_vertex_count(n);
  if (n < w_.size()) return w_[n];
  grow_w_to(recursion_index(n));
  return compute_weight_set(n);
}

WeightSet WeightTables::gaps(std::uint64_t n) const {
  return weight_set(n).complement_within(n, n * n);
}

WeightSet WeightTables::gaps(std::uint64_t n) {
  return weight_set(n).complement_within(n, n * n);
}

Weight WeightTables::weight_count(std::uint64_t n) const { return weight_set(n).cardinality(); }

Weight WeightTables::weight_count(std::uint64_t n) { return weight_set(n).cardinality(); }

bool WeightTables::contains(std::uint64_t n, Weight k) const {
  check_vertex_count(n);
  if (k < n || k > n * n) return false;
  if (k <= initial_interval_end(n) || k == n * n) return true;
  return weight_set(n).contains(k);
}

bool WeightTables::contains(std::uint64_t n, Weight k) {
  check_vertex_count(n);
  if (k < n || k > n * n) return false;
  if (k <= initial_interval_end(n) || k == n * n) return true;
  return weight_set(n).contains(k);
}

DiagonalFreeForm WeightTables::without_diagonal(std::uint64_t n) {
  return {weight_set(n).shifted_down(n), initial_interval_end(n) - n};
}

Weight WeightTables::recursive_formula_value(std::uint64_t n) {
  const std::uint64_t z = recursion_index(n);
  return n * n - z * n + initial_interval_end(z);
}

bool WeightTables::load(std::vector<Weight> b_values, std::vector<WeightSet> weight_sets) {
  if (b_values.size() < 2 || weight_sets.size() < 2) return false;
  WeightTables fresh;
  fresh.grow_b_to(b_values.size() - 1);
  fresh.grow_w_to(weight_sets.size() - 1);
  if (!std::equal(b_values.begin() + 1, b_values.end(), fresh.b_.begin() + 1)) return false;
  if (!std::equal(weight_sets.begin() + 1, weight_sets.end(), fresh.w_.begin() + 1)) return false;
  // Keep whichever table is longer.
  if (fresh.b_.size() < b_.size()) fresh.grow_b_to(b_.size() - 1);
  if (fresh.w_.size() < w_.size()) fresh.grow_w_to(w_.size() - 1);
  *this = std::move(fresh);
  return true;
}

std::vector<WeightSet> weight_sets_by_full_recursion(std::uint64_t max_n) {
  std::vector<WeightSet> sets(max_n + 1);
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    if (n <= kBaseWeightSetMaxN) {
      sets[n] = table_one_weight_set(n);
      continue;
    }
    std::vector<Interval> parts;
    parts.push_back({n, (3 * n * n + 3) / 4});
    for (std::uint64_t k = 1; k < n; ++k) {
      const Weight offset = n * (n - k);
      for (const auto& iv : sets[k].intervals()) parts.push_back({iv.lo + offset, iv.hi + offset});
    }
    parts.push_back({n * n, n * n});
    sets[n] = WeightSet::from_intervals(std::move(parts));
  }
  return sets;
}

}  // namespace reachpairs
