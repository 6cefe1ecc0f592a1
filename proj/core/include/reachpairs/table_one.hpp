#pragma once

#include <cstdint>

#include "reachpairs/weight_set.hpp"

namespace reachpairs {

inline constexpr std::uint64_t kTableOneMaxN = 12;

// Reference data for 1 <= n <= 12: W(n) and [n, n^2] \ W(n).
// Throws PreconditionError outside that range.
WeightSet table_one_weight_set(std::uint64_t n);
WeightSet table_one_gaps(std::uint64_t n);

}  // namespace reachpairs
