#pragma once

// Reference implementations used only by tests. Deliberately simple and
// independent of the library algorithms they check.

#include <cstdint>
#include <set>
#include <vector>

#include "reachpairs/digraph.hpp"
#include "reachpairs/weight_set.hpp"

namespace reachpairs::testing {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  Matrix m(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) m[u][v] = true;
  return m;
}

// Reflexive reachability by repeated squaring of the relation until stable.
inline Matrix reachable(const Digraph& g) {
  Matrix m = adjacency(g);
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m[i][j]) continue;
        for (std::size_t l = 0; l < n; ++l) {
          if (m[i][l] && m[l][j]) {
            m[i][j] = true;
            changed = true;
            break;
          }
        }
      }
    }
  }
  return m;
}

inline std::uint64_t reference_weight(const Digraph& g) {
  std::uint64_t total = 0;
  for (const auto& row : reachable(g)) {
    for (bool bit : row) total += bit;
  }
  return total;
}

// Weights of every labeled digraph on n <= 5 vertices.
inline std::set<std::uint64_t> weights_of_all_digraphs(std::size_t n) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) slots.emplace_back(u, v);
    }
  }
  std::set<std::uint64_t> weights;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    // Closure by bit tricks on row masks is enough at this size.
    std::vector<std::uint32_t> row(n, 0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if ((mask >> s) & 1u) row[slots[s].first] |= 1u << slots[s].second;
    }
    for (std::size_t i = 0; i < n; ++i) row[i] |= 1u << i;
    for (std::size_t l = 0; l < n; ++l) {
      for (std::size_t i = 0; i < n; ++i) {
        if ((row[i] >> l) & 1u) row[i] |= row[l];
      }
    }
    std::uint64_t w = 0;
    for (auto r : row) w += static_cast<std::uint64_t>(__builtin_popcount(r));
    weights.insert(w);
  }
  return weights;
}

inline WeightSet to_weight_set(const std::set<std::uint64_t>& members) {
  std::vector<Interval> parts;
  for (auto w : members) parts.push_back({w, w});
  return WeightSet::from_intervals(std::move(parts));
}

// W(n) as explicit integer sets: [n, ceil(3n^2/4)] plus n^2 plus every
// n(n-k) + c with c in W(k), k < n. Base rows from the reference table.
inline std::vector<std::set<std::uint64_t>> weight_sets_as_sets(std::size_t max_n,
                                                                 const std::vector<WeightSet>& base) {
  std::vector<std::set<std::uint64_t>> sets(max_n + 1);
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (n < base.size()) {
      for (const auto& iv : base[n].intervals()) {
        for (auto w = iv.lo; w <= iv.hi; ++w) sets[n].insert(w);
      }
      continue;
    }
    for (std::uint64_t w = n; w <= (3 * n * n + 3) / 4; ++w) sets[n].insert(w);
    sets[n].insert(n * n);
    for (std::size_t k = 1; k < n; ++k) {
      for (auto c : sets[k]) sets[n].insert(n * (n - k) + c);
    }
  }
  return sets;
}

}  // namespace reachpairs::testing
