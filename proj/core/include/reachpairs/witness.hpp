#pragma once

// Constructive inverse of the weight function.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reachpairs/digraph.hpp"
#include "reachpairs/tables.hpp"

namespace reachpairs {

// One vertex with edges to `out_edges` others; weight vertex_count + out_edges.
struct StarBase {
  std::uint64_t vertex_count = 0;
  std::uint64_t out_edges = 0;
};

struct CompleteBase {
  std::uint64_t vertex_count = 0;
};

// Small graph found by the oracle search.
struct SearchedBase {
  Digraph graph;
};

using WitnessBase = std::variant<StarBase, CompleteBase, SearchedBase>;

// Level i wraps the graph of the next level with mother_count mother
// vertices, giving vertex_count vertices in total.
struct WitnessLevel {
  std::uint64_t vertex_count = 0;
  std::uint64_t mother_count = 0;
  friend bool operator==(const WitnessLevel&, const WitnessLevel&) = default;
};

struct WitnessTrace {
  std::uint64_t n = 0;
  Weight k = 0;
  std::vector<WitnessLevel> levels;  // outermost first
  WitnessBase base = CompleteBase{1};
};

struct Witness {
  Digraph graph;
  WitnessTrace trace;
};

// A transitive digraph on n vertices of weight k. Throws NotAchievable when
// k is not in W(n).
Witness build_witness(WeightTables& tables, std::uint64_t n, Weight k);
// Read-only variant; every query must fall inside the prepared range.
Witness build_witness(const WeightTables& tables, std::uint64_t n, Weight k);

// Rebuilds the graph a trace describes.
Digraph replay(const WitnessTrace& trace);

// Adds `count` mother vertices labeled 0..count-1, shifting the vertices of
// `base` up by count. Mother vertices form a clique with edges to all others.
Digraph add_mother_vertices(const Digraph& base, std::size_t count);

// g has n vertices, is transitive and has weight k.
bool verify_witness(std::uint64_t n, Weight k, const Digraph& g);

std::string to_json(const WitnessTrace& trace);
// Throws ParseError.
WitnessTrace trace_from_json(std::string_view json);

}  // namespace reachpairs
