#include "reachpairs/witness.hpp"

#include <json.hpp>
#include <string>

#include "reachpairs/errors.hpp"
#include "reachpairs/oracle.hpp"
#include "reachpairs/structure.hpp"

namespace reachpairs {
namespace {

std::uint64_t base_vertex_count(const WitnessBase& base) {
  return std::visit(
      [](const auto& b) -> std::uint64_t {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, SearchedBase>) {
          return b.graph.vertex_count();
        } else {
          return b.vertex_count;
        }
      },
      base);
}

Digraph base_graph(const WitnessBase& base) {
  if (const auto* star = std::get_if<StarBase>(&base)) {
    if (star->vertex_count == 0 || star->out_edges >= star->vertex_count) {
      throw PreconditionError("star base needs out_edges < vertex_count");
    }
    std::vector<std::vector<Vertex>> out(star->vertex_count);
    for (std::uint64_t v = 1; v <= star->out_edges; ++v) out[0].push_back(static_cast<Vertex>(v));
    return Digraph::from_adjacency(std::move(out));
  }
  if (const auto* complete = std::get_if<CompleteBase>(&base)) {
    return Digraph::complete(complete->vertex_count);
  }
  return std::get<SearchedBase>(base).graph;
}

std::string not_covered(std::uint64_t n, Weight k) {
  return "no witness construction covers weight " + std::to_string(k) + " on " +
         std::to_string(n) + " vertices";
}

template <class Tables>
Witness build(Tables& tables, std::uint64_t n, Weight k) {
  if (n == 0) throw PreconditionError("witness needs at least one vertex");
  if (!tables.contains(n, k)) {
    const WeightSet all = tables.weight_set(n);
    throw NotAchievable(n, k, all.predecessor(k), all.successor(k));
  }

  WitnessTrace trace;
  trace.n = n;
  trace.k = k;
  std::uint64_t size = n;
  Weight target = k;
  while (true) {
    if (target == size * size) {
      trace.base = CompleteBase{size};
      break;
    }
    if (target <= 2 * size - 1) {
      trace.base = StarBase{size, target - size};
      break;
    }
    if (size <= kOracleWitnessMaxN) {
      const WeightSet known = tables.weight_set(size);
      trace.base = SearchedBase{oracle_witness(size, target, &known)};
      break;
    }

    const std::uint64_t zeta = tables.recursion_index(size);
    std::uint64_t inner = 0;
    if (target <= tables.initial_interval_end(size)) {
      // Intervals [n(n-m)+m, n(n-m)+b(m)] move up as m shrinks.
      for (std::uint64_t m = size - 1; m >= zeta && m >= 1; --m) {
        const Weight outer = size * (size - m);
        if (target >= outer + m && target <= outer + tables.initial_interval_end(m)) {
          inner = m;
          break;
        }
        if (target < outer + m) break;
      }
    } else {
      for (std::uint64_t m = zeta; m >= 1; --m) {
        const Weight outer = size * (size - m);
        if (target >= outer && tables.contains(m, target - outer)) {
          inner = m;
          break;
        }
      }
    }
    if (inner == 0) throw InternalError(not_covered(size, target));
    trace.levels.push_back({size, size - inner});
    target -= size * (size - inner);
    size = inner;
  }

  Digraph graph = replay(trace);
  if (!verify_witness(n, k, graph)) throw InternalError(not_covered(n, k));
  return {std::move(graph), std::move(trace)};
}

}  // namespace

Witness build_witness(WeightTables& tables, std::uint64_t n, Weight k) {
  return build(tables, n, k);
}

Witness build_witness(const WeightTables& tables, std::uint64_t n, Weight k) {
  return build(tables, n, k);
}

Digraph replay(const WitnessTrace& trace) {
  // Check the level chain before allocating anything.
  for (std::size_t i = 0; i < trace.levels.size(); ++i) {
    const auto& level = trace.levels[i];
    const std::uint64_t inner = i + 1 < trace.levels.size() ? trace.levels[i + 1].vertex_count
                                                             : base_vertex_count(trace.base);
    if (level.mother_count == 0 || level.vertex_count != level.mother_count + inner) {
      throw PreconditionError("inconsistent witness trace at level " + std::to_string(i));
    }
  }
  const std::uint64_t total =
      trace.levels.empty() ? base_vertex_count(trace.base) : trace.levels.front().vertex_count;
  if (trace.n != 0 && total != trace.n) {
    throw PreconditionError("witness trace describes " + std::to_string(total) +
                            " vertices, expected " + std::to_string(trace.n));
  }

  // Level i mothers take the next labels and point at every later label.
  const Digraph base = base_graph(trace.base);
  std::vector<std::vector<Vertex>> out(total);
  Vertex next = 0;
  for (const auto& level : trace.levels) {
    const Vertex start = next;
    for (std::uint64_t j = 0; j < level.mother_count; ++j, ++next) {
      auto& row = out[next];
      row.reserve(total - start - 1);
      for (Vertex v = start; v < total; ++v) {
        if (v != next) row.push_back(v);
      }
    }
  }
  for (Vertex u = 0; u < base.vertex_count(); ++u) {
    for (Vertex v : base.successors(u)) out[next + u].push_back(next + v);
  }
  return Digraph::from_adjacency(std::move(out));
}

Digraph add_mother_vertices(const Digraph& base, std::size_t count) {
  const std::size_t total = base.vertex_count() + count;
  std::vector<std::vector<Vertex>> out(total);
  for (Vertex m = 0; m < count; ++m) {
    for (Vertex v = 0; v < total; ++v) {
      if (v != m) out[m].push_back(v);
    }
  }
  for (Vertex u = 0; u < base.vertex_count(); ++u) {
    for (Vertex v : base.successors(u)) {
      out[u + count].push_back(static_cast<Vertex>(v + count));
    }
  }
  return Digraph::from_adjacency(std::move(out));
}

bool verify_witness(std::uint64_t n, Weight k, const Digraph& g) {
  return g.vertex_count() == n && is_transitive(g) && weight(g) == k;
}

std::string to_json(const WitnessTrace& trace) {
  nlohmann::ordered_json j;
  j["n"] = trace.n;
  j["k"] = trace.k;
  j["levels"] = nlohmann::ordered_json::array();
  for (const auto& level : trace.levels) {
    j["levels"].push_back({level.vertex_count, level.mother_count});
  }
  nlohmann::ordered_json base;
  if (const auto* star = std::get_if<StarBase>(&trace.base)) {
    base["kind"] = "star";
    base["n"] = star->vertex_count;
    base["out_edges"] = star->out_edges;
  } else if (const auto* complete = std::get_if<CompleteBase>(&trace.base)) {
    base["kind"] = "complete";
    base["n"] = complete->vertex_count;
  } else {
    const Digraph& g = std::get<SearchedBase>(trace.base).graph;
    base["kind"] = "table_lookup";
    base["n"] = g.vertex_count();
    base["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) base["edges"].push_back({u, v});
  }
  j["base"] = std::move(base);
  return j.dump();
}

WitnessTrace trace_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    WitnessTrace trace;
    trace.n = j.at("n").get<std::uint64_t>();
    trace.k = j.at("k").get<Weight>();
    for (const auto& level : j.at("levels")) {
      if (!level.is_array() || level.size() != 2) throw ParseError("level must be [n, a]");
      trace.levels.push_back({level[0].get<std::uint64_t>(), level[1].get<std::uint64_t>()});
    }
    const auto& base = j.at("base");
    const auto kind = base.at("kind").get<std::string>();
    const auto count = base.at("n").get<std::uint64_t>();
    if (kind == "star") {
      trace.base = StarBase{count, base.at("out_edges").get<std::uint64_t>()};
    } else if (kind == "complete") {
      trace.base = CompleteBase{count};
    } else if (kind == "table_lookup") {
      std::vector<Edge> edges;
      for (const auto& e : base.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge must be [u, v]");
        edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
      }
      trace.base = SearchedBase{Digraph(count, edges)};
    } else {
      throw ParseError("unknown base kind '" + kind + "'");
    }
    return trace;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid witness trace: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("invalid witness trace: ") + e.what());
  }
}

}  // namespace reachpairs
