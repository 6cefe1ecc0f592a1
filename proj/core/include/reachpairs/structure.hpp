#pragma once

// Reachability, weight and the clique structure of transitive digraphs.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "reachpairs/bit_matrix.hpp"
#include "reachpairs/digraph.hpp"

namespace reachpairs {

using Weight = std::uint64_t;

// Strongly connected components in reverse topological order: every
// component is listed after all components reachable from it. Vertices
// within a component are ascending.
std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g);

// Reflexive reachability relation: bit (u, v) is set iff v is reachable from
// u, including u == v. Computed on the condensation with bit-parallel row
// unions.
BitMatrix reachability(const Digraph& g);

Digraph transitive_closure(const Digraph& g);

// Floyd-Warshall on a dense boolean matrix. O(n^3); reference for small n.
Digraph transitive_closure_naive(const Digraph& g);

// Number of reachable pairs: n + |edges of the transitive closure|.
Weight weight(const Digraph& g);

bool is_transitive(const Digraph& g);

// Ordered partition of a transitive digraph into cliques V_1..V_t such that
// no edge goes from V_j back to V_i (i < j) and edges from V_i to V_j are
// all present or all absent.
struct CliqueChain {
  std::vector<std::vector<Vertex>> blocks;
  // full[i][j] for i < j: every vertex of blocks[i] has an edge to every
  // vertex of blocks[j]. Entries with i >= j are false.
  std::vector<std::vector<bool>> full;

  std::size_t size() const noexcept { return blocks.size(); }
};

// Repeatedly takes a vertex of maximum out-degree in the remaining induced
// subgraph (lowest index on ties) together with every vertex that has an
// edge into it. Throws PreconditionError if g is not transitive.
CliqueChain clique_chain_partition(const Digraph& g);

// A maximum-size block of clique_chain_partition(g), earliest block on ties.
std::vector<Vertex> largest_clique(const Digraph& g);

// Vertices with a path to every other vertex, ascending.
std::vector<Vertex> mother_vertices(const Digraph& g);

struct MotherFormReport {
  std::size_t d = 0;  // n - |largest clique|
  std::size_t c = 0;  // outside vertices weakly adjacent to the largest clique
  std::size_t s = 0;  // 2d - c, vertex count of the non-mother part
};

struct MotherForm {
  Digraph graph;
  MotherFormReport report;
};

// Rebuilds a transitive digraph of weight > (3/4)n^2 into one of equal
// weight with at least one mother vertex. Throws PreconditionError if g is
// not transitive or 4 w(g) <= 3 n^2, and InternalError if the recomputed
// weights differ.
MotherForm rearrange_to_mother_form(const Digraph& g);

// The construction behind rearrange_to_mother_form. The (n-d)-(d-c)
// highest-indexed vertices of the largest clique become mother vertices and
// keep their labels; the rest of the graph is the induced subgraph on the
// remaining 2d-c vertices. Needs d - c < n - d, which always holds when the
// largest clique has more than n/2 vertices; throws PreconditionError
// otherwise or if g is not transitive. Complete digraphs are returned
// unchanged.
MotherForm mother_form_construction(const Digraph& g);

// Reachable pairs (diagonal included) in lexicographic order.
std::vector<Edge> to_preorder(const Digraph& g);

// U_i = { j : (i, j) is a reachable pair } for every vertex i.
std::vector<std::vector<Vertex>> minimal_open_sets(const Digraph& g);

}  // namespace reachpairs
