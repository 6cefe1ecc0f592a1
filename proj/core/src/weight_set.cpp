#include "reachpairs/weight_set.hpp"

#include <algorithm>

#include "reachpairs/errors.hpp"

namespace reachpairs {

WeightSet WeightSet::from_intervals(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) {
    if (iv.lo > iv.hi) throw PreconditionError("interval with lo > hi");
  }
  std::sort(intervals.begin(), intervals.end());
  WeightSet result;
  auto& out = result.intervals_;
  out.reserve(intervals.size());
  for (const auto& iv : intervals) {
    if (!out.empty() && iv.lo <= out.back().hi + 1) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return result;
}

bool WeightSet::contains(Weight k) const {
  // First interval with hi >= k.
  auto it = std::lower_bound(intervals_.begin(), intervals_.end(), k,
                             [](const Interval& iv, Weight x) { return iv.hi < x; });
  return it != intervals_.end() && it->lo <= k;
}

bool WeightSet::intersects(Weight lo, Weight hi) const {
  if (lo > hi) return false;
  auto it = std::lower_bound(intervals_.begin(), intervals_.end(), lo,
                             [](const Interval& iv, Weight x) { return iv.hi < x; });
  return it != intervals_.end() && it->lo <= hi;
}

Weight WeightSet::cardinality() const {
  Weight total = 0;
  for (const auto& iv : intervals_) total += iv.size();
  return total;
}

std::optional<Weight> WeightSet::min() const {
  if (intervals_.empty()) return std::nullopt;
  return intervals_.front().lo;
}

std::optional<Weight> WeightSet::max() const {
  if (intervals_.empty()) return std::nullopt;
  return intervals_.back().hi;
}

std::optional<Weight> WeightSet::predecessor(Weight k) const {
  if (k == 0) return std::nullopt;
  // Last interval with lo < k.
  auto it = std::lower_bound(intervals_.begin(), intervals_.end(), k,
                             [](const Interval& iv, Weight x) { return iv.lo < x; });
  if (it == intervals_.begin()) return std::nullopt;
  --it;
  return std::min(it->hi, k - 1);
}

std::optional<Weight> WeightSet::successor(Weight k) const {
  // First interval with hi > k.
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), k,
                             [](Weight x, const Interval& iv) { return x < iv.hi; });
  if (it == intervals_.end()) return std::nullopt;
  return std::max(it->lo, k + 1);
}

WeightSet WeightSet::shifted_up(Weight delta) const {
  WeightSet result = *this;
  for (auto& iv : result.intervals_) {
    iv.lo += delta;
    iv.hi += delta;
  }
  return result;
}

WeightSet WeightSet::shifted_down(Weight delta) const {
  if (!intervals_.empty() && intervals_.front().lo < delta) {
    throw PreconditionError("shifted_down would go below zero");
  }
  WeightSet result = *this;
  for (auto& iv : result.intervals_) {
    iv.lo -= delta;
    iv.hi -= delta;
  }
  return result;
}

WeightSet WeightSet::complement_within(Weight lo, Weight hi) const {
  WeightSet result;
  if (lo > hi) return result;
  Weight next = lo;  // smallest candidate not yet covered
  bool done = false;
  for (const auto& iv : intervals_) {
    if (iv.hi < next) continue;
    if (iv.lo > hi) break;
    if (iv.lo > next) result.intervals_.push_back({next, iv.lo - 1});
    if (iv.hi >= hi) {
      done = true;
      break;
    }
    next = iv.hi + 1;
  }
  if (!done && next <= hi) result.intervals_.push_back({next, hi});
  return result;
}

WeightSet set_union(const WeightSet& a, const WeightSet& b) {
  std::vector<Interval> merged;
  merged.reserve(a.intervals_.size() + b.intervals_.size());
  std::merge(a.intervals_.begin(), a.intervals_.end(), b.intervals_.begin(), b.intervals_.end(),
             std::back_inserter(merged));
  WeightSet result;
  for (const auto& iv : merged) {
    if (!result.intervals_.empty() && iv.lo <= result.intervals_.back().hi + 1) {
      result.intervals_.back().hi = std::max(result.intervals_.back().hi, iv.hi);
    } else {
      result.intervals_.push_back(iv);
    }
  }
  return result;
}

std::string to_string(const WeightSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const auto& iv : s.intervals()) {
    if (!out.empty()) out += ", ";
    if (iv.lo == iv.hi) {
      out += std::to_string(iv.lo);
    } else {
      out += "[" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) + "]";
    }
  }
  return out;
}

}  // namespace reachpairs
