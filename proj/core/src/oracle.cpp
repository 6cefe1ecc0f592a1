#include "reachpairs/oracle.hpp"

#include <bit>
#include <future>
#include <string>

#include "reachpairs/errors.hpp"

namespace reachpairs {
namespace {

using Mask = std::uint32_t;

// Clique posets are built one block at a time in a natural order: block j
// can only be reached from blocks 0..j-1, and the set of blocks reaching it
// must be closed under "reaches". Every poset has such an order, so this
// reaches every transitive digraph up to relabeling.
struct PartialPoset {
  std::vector<std::uint32_t> sizes;
  std::vector<Mask> reached_by;  // blocks that reach block j, j excluded

  bool closed(Mask mask) const {
    for (Mask rest = mask; rest != 0; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      if ((reached_by[i] & ~mask) != 0) return false;
    }
    return true;
  }

  Weight size_sum(Mask mask) const {
    Weight total = 0;
    for (Mask rest = mask; rest != 0; rest &= rest - 1) {
      total += sizes[static_cast<std::size_t>(std::countr_zero(rest))];
    }
    return total;
  }

  void push(std::uint32_t size, Mask mask) {
    sizes.push_back(size);
    reached_by.push_back(mask);
  }

  void pop() {
    sizes.pop_back();
    reached_by.pop_back();
  }

  CliquePoset finish() const {
    CliquePoset poset;
    poset.block_sizes = sizes;
    const std::size_t t = sizes.size();
    poset.reach.assign(t, std::vector<bool>(t, false));
    for (std::size_t j = 0; j < t; ++j) {
      poset.reach[j][j] = true;
      for (std::size_t i = 0; i < j; ++i) {
        if ((reached_by[j] >> i) & 1u) poset.reach[i][j] = true;
      }
    }
    return poset;
  }
};

void collect(std::uint64_t n, std::uint64_t placed, Weight w, PartialPoset& state,
             std::vector<char>& seen) {
  if (placed == n) {
    seen[w] = 1;
    return;
  }
  const auto t = static_cast<std::uint32_t>(state.sizes.size());
  const Mask limit = Mask{1} << t;
  for (std::uint64_t s = 1; s <= n - placed; ++s) {
    for (Mask mask = 0; mask < limit; ++mask) {
      if (!state.closed(mask)) continue;
      state.push(static_cast<std::uint32_t>(s), mask);
      collect(n, placed + s, w + s * s + s * state.size_sum(mask), state, seen);
      state.pop();
    }
  }
}

bool search(std::uint64_t n, Weight k, std::uint64_t placed, Weight w, PartialPoset& state) {
  if (placed == n) return w == k;
  const std::uint64_t rest = n - placed;
  // New vertices add at least one pair each and at most rest^2 + rest*placed.
  if (k < w + rest || k > w + rest * rest + rest * placed) return false;
  const auto t = static_cast<std::uint32_t>(state.sizes.size());
  const Mask limit = Mask{1} << t;
  for (std::uint64_t s = rest; s >= 1; --s) {
    for (Mask m = limit; m-- > 0;) {
      if (!state.closed(m)) continue;
      const Weight next = w + s * s + s * state.size_sum(m);
      if (next > k) continue;
      state.push(static_cast<std::uint32_t>(s), m);
      if (search(n, k, placed + s, next, state)) return true;
      state.pop();
    }
  }
  return false;
}

}  // namespace

std::size_t CliquePoset::vertex_count() const {
  std::size_t total = 0;
  for (auto s : block_sizes) total += s;
  return total;
}

bool CliquePoset::is_valid() const {
  const std::size_t t = block_sizes.size();
  if (t == 0 || reach.size() != t) return false;
  for (std::size_t i = 0; i < t; ++i) {
    if (block_sizes[i] == 0 || reach[i].size() != t || !reach[i][i]) return false;
  }
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if (i != j && reach[i][j] && reach[j][i]) return false;
      if (!reach[i][j]) continue;
      for (std::size_t l = 0; l < t; ++l) {
        if (reach[j][l] && !reach[i][l]) return false;
      }
    }
  }
  return true;
}

Weight CliquePoset::weight() const {
  Weight total = 0;
  for (std::size_t i = 0; i < block_sizes.size(); ++i) {
    for (std::size_t j = 0; j < block_sizes.size(); ++j) {
      if (reach[i][j]) total += Weight{block_sizes[i]} * block_sizes[j];
    }
  }
  return total;
}

Digraph CliquePoset::expand() const {
  const std::size_t t = block_sizes.size();
  std::vector<Vertex> start(t + 1, 0);
  for (std::size_t i = 0; i < t; ++i) start[i + 1] = start[i] + block_sizes[i];
  std::vector<std::vector<Vertex>> out(start[t]);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      if (!reach[i][j]) continue;
      for (Vertex u = start[i]; u < start[i + 1]; ++u) {
        for (Vertex v = start[j]; v < start[j + 1]; ++v) {
          if (u != v) out[u].push_back(v);
        }
      }
    }
  }
  return Digraph::from_adjacency(std::move(out));
}

WeightSet oracle_weight_set(std::uint64_t n) {
  if (n < 1 || n > kOracleMaxN) {
    throw PreconditionError("oracle_weight_set supports 1 <= n <= 8, got " + std::to_string(n));
  }
  // One task per size of the first block.
  std::vector<std::future<std::vector<char>>> tasks;
  for (std::uint64_t first = 1; first <= n; ++first) {
    tasks.push_back(std::async(std::launch::async, [n, first] {
      std::vector<char> seen(n * n + 1, 0);
      PartialPoset state;
      state.push(static_cast<std::uint32_t>(first), 0);
      collect(n, first, first * first, state, seen);
      return seen;
    }));
  }
  std::vector<char> seen(n * n + 1, 0);
  for (auto& task : tasks) {
    const auto part = task.get();
    for (std::size_t w = 0; w < part.size(); ++w) seen[w] |= part[w];
  }
  std::vector<Interval> members;
  for (Weight w = 0; w < seen.size(); ++w) {
    if (seen[w]) members.push_back({w, w});
  }
  return WeightSet::from_intervals(std::move(members));
}

std::optional<CliquePoset> find_clique_poset(std::uint64_t n, Weight k) {
  if (n < 1 || n > kOracleWitnessMaxN) {
    throw PreconditionError("clique poset search supports 1 <= n <= 11, got " + std::to_string(n));
  }
  PartialPoset state;
  if (!search(n, k, 0, 0, state)) return std::nullopt;
  return state.finish();
}

Digraph oracle_witness(std::uint64_t n, Weight k, const WeightSet* known) {
  if (n < 1 || n > kOracleWitnessMaxN) {
    throw PreconditionError("oracle_witness supports 1 <= n <= 11, got " + std::to_string(n));
  }
  if (known != nullptr && !known->contains(k)) {
    throw NotAchievable(n, k, known->predecessor(k), known->successor(k));
  }
  auto poset = find_clique_poset(n, k);
  if (!poset) {
    if (n <= kOracleMaxN) {
      const WeightSet all = oracle_weight_set(n);
      throw NotAchievable(n, k, all.predecessor(k), all.successor(k));
    }
    throw NotAchievable(n, k, std::nullopt, std::nullopt);
  }
  return poset->expand();
}

}  // namespace reachpairs
