#include "reachpairs/table_one.hpp"

#include <array>
#include <string>
#include <vector>

#include "reachpairs/errors.hpp"

namespace reachpairs {
namespace {

using Row = std::vector<Interval>;

const std::array<Row, kTableOneMaxN + 1>& weight_rows() {
  static const std::array<Row, kTableOneMaxN + 1> rows = {{
      {},
      {{1, 1}},
      {{2, 4}},
      {{3, 7}, {9, 9}},
      {{4, 13}, {16, 16}},
      {{5, 19}, {21, 21}, {25, 25}},
      {{6, 28}, {31, 31}, {36, 36}},
      {{7, 35}, {37, 39}, {43, 43}, {49, 49}},
      {{8, 52}, {57, 57}, {64, 64}},
      {{9, 61}, {63, 63}, {65, 67}, {73, 73}, {81, 81}},
      {{10, 77}, {79, 79}, {82, 84}, {91, 91}, {100, 100}},
      {{11, 95}, {97, 97}, {101, 103}, {111, 111}, {121, 121}},
      {{12, 109}, {111, 115}, {117, 117}, {122, 124}, {133, 133}, {144, 144}},
  }};
  return rows;
}

const std::array<Row, kTableOneMaxN + 1>& gap_rows() {
  static const std::array<Row, kTableOneMaxN + 1> rows = {{
      {},
      {},
      {},
      {{8, 8}},
      {{14, 15}},
      {{20, 20}, {22, 24}},
      {{29, 30}, {32, 35}},
      {{36, 36}, {40, 42}, {44, 48}},
      {{53, 56}, {58, 63}},
      {{62, 62}, {64, 64}, {68, 72}, {74, 80}},
      {{78, 78}, {80, 81}, {85, 90}, {92, 99}},
      {{96, 96}, {98, 100}, {104, 110}, {112, 120}},
      {{110, 110}, {116, 116}, {118, 121}, {125, 132}, {134, 143}},
  }};
  return rows;
}

void check_row(std::uint64_t n) {
  if (n < 1 || n > kTableOneMaxN) {
    throw PreconditionError("reference table covers 1 <= n <= 12, got " + std::to_string(n));
  }
}

}  // namespace

WeightSet table_one_weight_set(std::uint64_t n) {
  check_row(n);
  return WeightSet::from_intervals(weight_rows()[n]);
}

WeightSet table_one_gaps(std::uint64_t n) {
  check_row(n);
  return WeightSet::from_intervals(gap_rows()[n]);
}

}  // namespace reachpairs
