#pragma once

// Brute-force ground truth for small n, independent of the recursions.

#include <cstdint>
#include <optional>
#include <vector>

#include "reachpairs/digraph.hpp"
#include "reachpairs/weight_set.hpp"

namespace reachpairs {

inline constexpr std::uint64_t kOracleMaxN = 8;
inline constexpr std::uint64_t kOracleWitnessMaxN = 11;

// Condensed form of a transitive digraph: clique sizes plus the
// reachability order between cliques.
struct CliquePoset {
  std::vector<std::uint32_t> block_sizes;
  // reach[i][j]: block i reaches block j. Reflexive, transitive and
  // antisymmetric on distinct blocks.
  std::vector<std::vector<bool>> reach;

  std::size_t vertex_count() const;
  bool is_valid() const;
  // sum over (i, j) with reach[i][j] of n_i n_j.
  Weight weight() const;
  // Blocks get consecutive labels in block order.
  Digraph expand() const;
};

// All achievable weights on n vertices by enumerating clique posets.
// Requires 1 <= n <= 8.
WeightSet oracle_weight_set(std::uint64_t n);

// Depth-first search for a clique poset on n vertices of weight k.
// Requires 1 <= n <= 11.
std::optional<CliquePoset> find_clique_poset(std::uint64_t n, Weight k);

// Expanded witness of weight k on n <= 11 vertices. When `known` is given it
// is taken as W(n) and used to reject k up front; otherwise a failed search
// is the rejection, which is exhaustive and only practical for n <= 8.
// Throws NotAchievable or PreconditionError.
Digraph oracle_witness(std::uint64_t n, Weight k, const WeightSet* known = nullptr);

}  // namespace reachpairs
