#pragma once

#include <cstddef>
#include <random>

#include "reachpairs/digraph.hpp"
#include "reachpairs/oracle.hpp"

namespace reachpairs {

// Each ordered pair u != v is an edge with the given probability.
Digraph random_digraph(std::size_t n, double edge_probability, std::mt19937_64& rng);

// Random composition of n into blocks with a random reachability order on
// the blocks, in natural block order.
CliquePoset random_clique_poset(std::size_t n, std::mt19937_64& rng);

// Expansion of random_clique_poset under a random vertex relabeling.
Digraph random_transitive_digraph(std::size_t n, std::mt19937_64& rng);

}  // namespace reachpairs
