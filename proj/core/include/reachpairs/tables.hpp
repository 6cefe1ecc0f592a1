#pragma once

// Exact recursive computation of b(n), l(z) = b(z) - z + 3, the recursion
// index zeta(n) and the weight sets W(n).

#include <cstdint>
#include <span>
#include <vector>

#include "reachpairs/weight_set.hpp"

namespace reachpairs {

// Largest supported vertex count; keeps n^2 inside 64 bits with headroom.
inline constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 31;

// S(n) = { k - n : k in W(n) } and f(n) = b(n) - n, the forms that count
// reachable pairs without the diagonal.
struct DiagonalFreeForm {
  WeightSet weights;
  Weight initial_interval_end = 0;
};

// Memoized b/l tables and W(n) sets.
//
// Non-const queries grow the tables as needed. Const queries never mutate:
// they succeed for arguments inside the prepared range and throw
// std::out_of_range otherwise. After prepare(max_n) a const reference can be
// shared by any number of concurrent readers.
class WeightTables {
 public:
  WeightTables();

  // Grow every table so that const queries succeed for all n <= max_n.
  void prepare(std::uint64_t max_n);

  // b(n): largest integer with [n, b(n)] inside W(n).
  Weight initial_interval_end(std::uint64_t n);
  Weight initial_interval_end(std::uint64_t n) const;

  // l(z) = b(z) - z + 3.
  Weight threshold(std::uint64_t z);
  Weight threshold(std::uint64_t z) const;

  // zeta(n): the unique z with l(z) <= n < l(z + 1). Requires n >= 3.
  std::uint64_t recursion_index(std::uint64_t n);
  std::uint64_t recursion_index(std::uint64_t n) const;

  // W(n).
  WeightSet weight_set(std::uint64_t n);
  WeightSet weight_set(std::uint64_t n) const;

  // [n, n^2] \ W(n).
  WeightSet gaps(std::uint64_t n);
  WeightSet gaps(std::uint64_t n) const;

  // |W(n)| without expanding the set.
  Weight weight_count(std::uint64_t n);
  Weight weight_count(std::uint64_t n) const;

  bool contains(std::uint64_t n, Weight k);
  bool contains(std::uint64_t n, Weight k) const;

  DiagonalFreeForm without_diagonal(std::uint64_t n);

  // n^2 - zeta(n) n + b(zeta(n)) evaluated for any n >= 3, including n = 8
  // where it gives 47 and b(8) is actually 52.
  Weight recursive_formula_value(std::uint64_t n);

  // b(1..size) as stored; index 0 is unused and holds 0.
  std::span<const Weight> b_values() const noexcept { return b_; }
  // W(1..size) as memoized; index 0 is unused and empty.
  std::span<const WeightSet> memoized_weight_sets() const noexcept { return w_; }

  // Replace the tables with externally supplied values (e.g. a cache file).
  // The values are checked against the recursions and the embedded base data;
  // on any mismatch nothing changes and false is returned.
  bool load(std::vector<Weight> b_values, std::vector<WeightSet> weight_sets);

 private:
  void grow_b_to(std::uint64_t z);
  void grow_thresholds_past(std::uint64_t n);
  void grow_w_to(std::uint64_t n);
  std::uint64_t index_from_table(std::uint64_t n) const;
  WeightSet compute_weight_set(std::uint64_t n) const;
  void check_range(std::uint64_t n) const;

  std::vector<Weight> b_;       // b_[z], z >= 1
  std::vector<Weight> ell_;     // ell_[z] = b_[z] - z + 3
  std::vector<WeightSet> w_;    // w_[n], n >= 1
};

// W(1..max_n) by the recursion that combines [n, ceil(3n^2/4)], the mother
// vertex extensions of every W(k) with k < n, and {n^2}. Independent of the
// b recursion; used as a cross-check. Index 0 is empty.
std::vector<WeightSet> weight_sets_by_full_recursion(std::uint64_t max_n);

}  // namespace reachpairs
