#include "reachpairs/generators.hpp"

#include <algorithm>
#include <numeric>

#include "reachpairs/errors.hpp"

namespace reachpairs {

Digraph random_digraph(std::size_t n, double edge_probability, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(std::clamp(edge_probability, 0.0, 1.0));
  std::vector<std::vector<Vertex>> out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) out[u].push_back(v);
    }
  }
  return Digraph::from_adjacency(std::move(out));
}

CliquePoset random_clique_poset(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw PreconditionError("random_clique_poset needs n >= 1");
  CliquePoset poset;
  // Cut points of a random composition of n.
  std::bernoulli_distribution cut(0.5);
  std::uint32_t run = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (cut(rng)) {
      poset.block_sizes.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  poset.block_sizes.push_back(run);

  const std::size_t t = poset.block_sizes.size();
  std::uniform_real_distribution<double> density_pick(0.0, 1.0);
  std::bernoulli_distribution link(density_pick(rng));
  poset.reach.assign(t, std::vector<bool>(t, false));
  for (std::size_t j = 0; j < t; ++j) {
    poset.reach[j][j] = true;
    for (std::size_t i = 0; i < j; ++i) {
      if (poset.reach[i][j] || !link(rng)) continue;
      // Later blocks are unrelated so far, so only the predecessors of i
      // gain j.
      for (std::size_t h = 0; h <= i; ++h) {
        if (poset.reach[h][i]) poset.reach[h][j] = true;
      }
    }
  }
  return poset;
}

Digraph random_transitive_digraph(std::size_t n, std::mt19937_64& rng) {
  const Digraph g = random_clique_poset(n, rng).expand();
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<std::vector<Vertex>> out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.successors(u)) out[label[u]].push_back(label[v]);
  }
  return Digraph::from_adjacency(std::move(out));
}

}  // namespace reachpairs
