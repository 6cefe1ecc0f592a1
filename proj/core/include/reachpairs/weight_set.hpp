#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace reachpairs {

using Weight = std::uint64_t;

// Inclusive integer interval [lo, hi].
struct Interval {
  Weight lo = 0;
  Weight hi = 0;

  Weight size() const noexcept { return hi - lo + 1; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Finite set of non-negative integers held as sorted, disjoint,
// non-adjacent inclusive intervals. Singletons are stored as lo == hi.
class WeightSet {
 public:
  WeightSet() = default;

  // Accepts intervals in any order, overlapping or adjacent, and merges them.
  // Throws PreconditionError if some interval has lo > hi.
  static WeightSet from_intervals(std::vector<Interval> intervals);
  static WeightSet range(Weight lo, Weight hi) { return from_intervals({{lo, hi}}); }

  std::span<const Interval> intervals() const noexcept { return intervals_; }
  std::size_t interval_count() const noexcept { return intervals_.size(); }
  bool empty() const noexcept { return intervals_.empty(); }

  bool contains(Weight k) const;
  // True iff some member lies in [lo, hi].
  bool intersects(Weight lo, Weight hi) const;
  Weight cardinality() const;

  std::optional<Weight> min() const;
  std::optional<Weight> max() const;
  // Largest member < k and smallest member > k.
  std::optional<Weight> predecessor(Weight k) const;
  std::optional<Weight> successor(Weight k) const;

  WeightSet shifted_up(Weight delta) const;
  // Throws PreconditionError if delta exceeds the minimum.
  WeightSet shifted_down(Weight delta) const;

  // [lo, hi] minus this set.
  WeightSet complement_within(Weight lo, Weight hi) const;

  friend WeightSet set_union(const WeightSet& a, const WeightSet& b);
  friend bool operator==(const WeightSet&, const WeightSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

// "[3, 7], 9" style; "{}" for the empty set.
std::string to_string(const WeightSet& s);

}  // namespace reachpairs
