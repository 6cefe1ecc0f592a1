#include "reachpairs/digraph.hpp"

#include <algorithm>
#include <string>

#include "reachpairs/errors.hpp"

namespace reachpairs {
namespace {

void check_vertex_count(std::size_t n) {
  if (n == 0) throw PreconditionError("a digraph needs at least one vertex");
  if (n > std::size_t{1} << 31) {
    throw PreconditionError("vertex count " + std::to_string(n) + " exceeds 2^31");
  }
}

}  // namespace

Digraph::Digraph(std::size_t n) {
  check_vertex_count(n);
  out_.resize(n);
}

Digraph::Digraph(std::size_t n, std::span<const Edge> edges) : Digraph(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") out of range for " + std::to_string(n) + " vertices");
    }
    out_[u].push_back(v);
  }
  normalize();
}

Digraph::Digraph(std::size_t n, std::initializer_list<Edge> edges)
    : Digraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Digraph Digraph::from_adjacency(std::vector<std::vector<Vertex>> successors) {
  check_vertex_count(successors.size());
  Digraph g;
  g.out_ = std::move(successors);
  const auto n = g.out_.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (Vertex v : g.out_[u]) {
      if (v >= n) {
        throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") out of range for " + std::to_string(n) + " vertices");
      }
    }
  }
  g.normalize();
  return g;
}

Digraph Digraph::complete(std::size_t n) {
  check_vertex_count(n);
  Digraph g;
  g.out_.resize(n);
  for (std::size_t u = 0; u < n; ++u) {
    auto& row = g.out_[u];
    row.reserve(n - 1);
    for (std::size_t v = 0; v < n; ++v) {
      if (v != u) row.push_back(static_cast<Vertex>(v));
    }
  }
  g.edge_count_ = n * (n - 1);
  return g;
}

void Digraph::normalize() {
  edge_count_ = 0;
  for (std::size_t u = 0; u < out_.size(); ++u) {
    auto& row = out_[u];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    if (std::binary_search(row.begin(), row.end(), static_cast<Vertex>(u))) {
      throw PreconditionError("self-loop at vertex " + std::to_string(u));
    }
    edge_count_ += row.size();
  }
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
  const auto& row = out_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (std::size_t u = 0; u < out_.size(); ++u) {
    for (Vertex v : out_[u]) result.emplace_back(static_cast<Vertex>(u), v);
  }
  return result;
}

Digraph Digraph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> relabel(out_.size(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= out_.size()) throw PreconditionError("induced: vertex out of range");
    if (relabel[vertices[i]] != static_cast<Vertex>(-1)) {
      throw PreconditionError("induced: repeated vertex");
    }
    relabel[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Vertex>> out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex v : out_[vertices[i]]) {
      if (relabel[v] != static_cast<Vertex>(-1)) out[i].push_back(relabel[v]);
    }
  }
  return from_adjacency(std::move(out));
}

}  // namespace reachpairs
