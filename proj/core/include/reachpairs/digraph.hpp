#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace reachpairs {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Loop-free directed graph on vertices 0..n-1 with a set of edges.
// The reachable pairs (v, v) are implicit and never stored.
class Digraph {
 public:
  // Edgeless graph. Throws PreconditionError for n == 0.
  explicit Digraph(std::size_t n);

  // Duplicate edges collapse; self-loops and out-of-range endpoints throw
  // PreconditionError.
  Digraph(std::size_t n, std::span<const Edge> edges);
  Digraph(std::size_t n, std::initializer_list<Edge> edges);

  // Same validation as above, from per-vertex successor lists.
  static Digraph from_adjacency(std::vector<std::vector<Vertex>> successors);

  static Digraph complete(std::size_t n);

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  // Sorted, duplicate-free.
  std::span<const Vertex> successors(Vertex v) const { return out_.at(v); }
  std::size_t out_degree(Vertex v) const { return out_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  // All edges in lexicographic order.
  std::vector<Edge> edges() const;

  // Subgraph induced by `vertices`; vertices[i] becomes vertex i.
  Digraph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  Digraph() = default;
  void normalize();

  std::vector<std::vector<Vertex>> out_;
  std::size_t edge_count_ = 0;
};

}  // namespace reachpairs
