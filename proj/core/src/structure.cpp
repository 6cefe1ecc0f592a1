#include "reachpairs/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "reachpairs/errors.hpp"

namespace reachpairs {
namespace {

using Word = BitMatrix::Word;
constexpr std::size_t kWordBits = BitMatrix::kWordBits;

// Reachability rows per strongly connected component, reflexive.
struct Condensation {
  std::vector<std::vector<Vertex>> components;  // reverse topological order
  std::vector<std::uint32_t> component_of;
  std::vector<Word> rows;                       // components.size() x words
  std::size_t words = 0;

  std::span<const Word> row(std::size_t c) const {
    return {rows.data() + c * words, words};
  }
};

Condensation condense(const Digraph& g) {
  Condensation cond;
  const std::size_t n = g.vertex_count();
  cond.components = strongly_connected_components(g);
  cond.component_of.assign(n, 0);
  for (std::size_t c = 0; c < cond.components.size(); ++c) {
    for (Vertex v : cond.components[c]) cond.component_of[v] = static_cast<std::uint32_t>(c);
  }
  cond.words = (n + kWordBits - 1) / kWordBits;
  cond.rows.assign(cond.components.size() * cond.words, 0);

  // Components arrive sinks first, so every successor row is final when used.
  std::vector<std::size_t> merged_into(cond.components.size(),
                                       std::numeric_limits<std::size_t>::max());
  for (std::size_t c = 0; c < cond.components.size(); ++c) {
    Word* dst = cond.rows.data() + c * cond.words;
    for (Vertex v : cond.components[c]) {
      dst[v / kWordBits] |= Word{1} << (v % kWordBits);
    }
    for (Vertex v : cond.components[c]) {
      for (Vertex w : g.successors(v)) {
        const std::size_t d = cond.component_of[w];
        if (d == c || merged_into[d] == c) continue;
        merged_into[d] = c;
        const Word* src = cond.rows.data() + d * cond.words;
        for (std::size_t i = 0; i < cond.words; ++i) dst[i] |= src[i];
      }
    }
  }
  return cond;
}

std::size_t popcount_row(std::span<const Word> row) {
  std::size_t total = 0;
  for (Word w : row) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void require_transitive(const Digraph& g, const char* op) {
  if (!is_transitive(g)) {
    throw PreconditionError(std::string(op) + " requires a transitive digraph");
  }
}

BitMatrix adjacency_matrix(const Digraph& g) {
  BitMatrix adj(g.vertex_count());
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.successors(static_cast<Vertex>(u))) adj.set(u, v);
  }
  return adj;
}

}  // namespace

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> frames;  // vertex, next successor
  std::vector<std::vector<Vertex>> components;
  std::uint32_t counter = 0;

  auto enter = [&](Vertex v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    frames.emplace_back(v, 0);
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    enter(static_cast<Vertex>(root));
    while (!frames.empty()) {
      const Vertex v = frames.back().first;
      const auto succ = g.successors(v);
      if (frames.back().second < succ.size()) {
        const Vertex w = succ[frames.back().second++];
        if (index[w] == kUnvisited) {
          enter(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<Vertex> component;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      frames.pop_back();
      if (!frames.empty()) {
        const Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return components;
}

BitMatrix reachability(const Digraph& g) {
  const Condensation cond = condense(g);
  BitMatrix reach(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto src = cond.row(cond.component_of[v]);
    std::copy(src.begin(), src.end(), reach.row(v).begin());
  }
  return reach;
}

Digraph transitive_closure(const Digraph& g) {
  const BitMatrix reach = reachability(g);
  std::vector<std::vector<Vertex>> out(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out[v] = reach.row_indices(v);
    out[v].erase(std::find(out[v].begin(), out[v].end(), static_cast<Vertex>(v)));
  }
  return Digraph::from_adjacency(std::move(out));
}

Digraph transitive_closure_naive(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) reach[u][v] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && reach[i][j]) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Digraph(n, edges);
}

Weight weight(const Digraph& g) {
  const Condensation cond = condense(g);
  Weight total = 0;
  for (std::size_t c = 0; c < cond.components.size(); ++c) {
    total += static_cast<Weight>(cond.components[c].size()) * popcount_row(cond.row(c));
  }
  return total;
}

bool is_transitive(const Digraph& g) {
  return weight(g) == g.vertex_count() + g.edge_count();
}

CliqueChain clique_chain_partition(const Digraph& g) {
  require_transitive(g, "clique_chain_partition");
  const std::size_t n = g.vertex_count();
  const BitMatrix adj = adjacency_matrix(g);

  std::vector<Word> remaining(adj.words_per_row(), 0);
  for (std::size_t v = 0; v < n; ++v) remaining[v / kWordBits] |= Word{1} << (v % kWordBits);
  std::size_t left = n;

  auto is_remaining = [&](std::size_t v) {
    return (remaining[v / kWordBits] >> (v % kWordBits)) & 1u;
  };

  CliqueChain chain;
  while (left > 0) {
    std::size_t best = n;
    std::size_t best_degree = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!is_remaining(v)) continue;
      std::size_t degree = 0;
      auto row = adj.row(v);
      for (std::size_t i = 0; i < row.size(); ++i) {
        degree += static_cast<std::size_t>(std::popcount(row[i] & remaining[i]));
      }
      if (best == n || degree > best_degree) {
        best = v;
        best_degree = degree;
      }
    }
    std::vector<Vertex> block;
    for (std::size_t v = 0; v < n; ++v) {
      if (is_remaining(v) && (v == best || adj.test(v, best))) block.push_back(static_cast<Vertex>(v));
    }
    for (Vertex v : block) remaining[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    left -= block.size();
    chain.blocks.push_back(std::move(block));
  }

  const std::size_t t = chain.blocks.size();
  chain.full.assign(t, std::vector<bool>(t, false));
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      bool all = true;
      for (Vertex u : chain.blocks[i]) {
        for (Vertex v : chain.blocks[j]) {
          if (!adj.test(u, v)) {
            all = false;
            break;
          }
        }
        if (!all) break;
      }
      chain.full[i][j] = all;
    }
  }
  return chain;
}

std::vector<Vertex> largest_clique(const Digraph& g) {
  CliqueChain chain = clique_chain_partition(g);
  std::size_t best = 0;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (chain.blocks[i].size() > chain.blocks[best].size()) best = i;
  }
  return std::move(chain.blocks[best]);
}

std::vector<Vertex> mother_vertices(const Digraph& g) {
  const Condensation cond = condense(g);
  std::vector<Vertex> result;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (popcount_row(cond.row(cond.component_of[v])) == g.vertex_count()) {
      result.push_back(static_cast<Vertex>(v));
    }
  }
  return result;
}

MotherForm mother_form_construction(const Digraph& g) {
  require_transitive(g, "mother_form_construction");
  const std::size_t n = g.vertex_count();
  const Weight w = weight(g);
  if (w == static_cast<Weight>(n) * n) return {g, {}};

  const std::vector<Vertex> clique = largest_clique(g);
  const std::size_t m = clique.size();
  const std::size_t d = n - m;
  std::size_t c = 0;
  const Vertex anchor = clique.front();
  std::vector<bool> in_clique(n, false);
  for (Vertex v : clique) in_clique[v] = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (in_clique[v]) continue;
    const auto vv = static_cast<Vertex>(v);
    if (g.has_edge(vv, anchor) || g.has_edge(anchor, vv)) ++c;
  }
  if (d - c >= m) {
    throw PreconditionError("mother_form_construction: largest clique too small (d - c >= n - d)");
  }

  const std::size_t promoted = m - (d - c);  // (n - d) - (d - c) >= 1
  std::vector<bool> is_mother(n, false);
  for (std::size_t i = m - promoted; i < m; ++i) is_mother[clique[i]] = true;

  std::vector<std::vector<Vertex>> out(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (is_mother[u]) {
      for (std::size_t v = 0; v < n; ++v) {
        if (v != u) out[u].push_back(static_cast<Vertex>(v));
      }
    } else {
      for (Vertex v : g.successors(static_cast<Vertex>(u))) {
        if (!is_mother[v]) out[u].push_back(v);
      }
    }
  }
  MotherForm result{Digraph::from_adjacency(std::move(out)), {d, c, 2 * d - c}};

  const Weight rebuilt = weight(result.graph);
  if (rebuilt != w) {
    throw InternalError("mother_form_construction changed the weight from " +
                        std::to_string(w) + " to " + std::to_string(rebuilt));
  }
  if (mother_vertices(result.graph).empty()) {
    throw InternalError("mother_form_construction produced no mother vertex");
  }
  return result;
}

MotherForm rearrange_to_mother_form(const Digraph& g) {
  require_transitive(g, "rearrange_to_mother_form");
  const auto n = static_cast<Weight>(g.vertex_count());
  const Weight w = weight(g);
  if (4 * w <= 3 * n * n) {
    throw PreconditionError("rearrange_to_mother_form requires weight > (3/4)n^2, got " +
                            std::to_string(w) + " for n = " + std::to_string(n));
  }
  return mother_form_construction(g);
}

std::vector<Edge> to_preorder(const Digraph& g) {
  const BitMatrix reach = reachability(g);
  std::vector<Edge> pairs;
  pairs.reserve(reach.count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (Vertex j : reach.row_indices(i)) pairs.emplace_back(static_cast<Vertex>(i), j);
  }
  return pairs;
}

std::vector<std::vector<Vertex>> minimal_open_sets(const Digraph& g) {
  const BitMatrix reach = reachability(g);
  std::vector<std::vector<Vertex>> sets(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) sets[i] = reach.row_indices(i);
  return sets;
}

}  // namespace reachpairs
