#pragma once

// Verification sweeps behind `reachpairs check`.

#include <cstdint>
#include <string>
#include <vector>

#include "reachpairs/tables.hpp"

namespace reachpairs {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CheckOptions {
  std::uint64_t max_n = 200;
  unsigned threads = 1;
  std::uint64_t seed = 20240601;
  std::size_t random_cases = 1000;
};

// Each suite calls tables.prepare(...) once and then only reads it, fanning
// out across options.threads workers.

// W(n), gaps and b against the reference table for n <= min(max_n, 12);
// b-table properties, gap laws and the two W recursions up to max_n.
std::vector<CheckResult> check_table(WeightTables& tables, const CheckOptions& options);

// Estimator bounds and series identities up to max_n.
std::vector<CheckResult> check_bounds(WeightTables& tables, const CheckOptions& options);

// Witness round-trip and gap rejection up to max_n.
std::vector<CheckResult> check_witness(WeightTables& tables, const CheckOptions& options);

// Brute force against the recursion for n <= min(max_n, 8), plus randomized
// structural properties of digraphs.
std::vector<CheckResult> check_oracle(WeightTables& tables, const CheckOptions& options);

}  // namespace reachpairs
