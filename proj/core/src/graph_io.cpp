#include "reachpairs/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "reachpairs/errors.hpp"

namespace reachpairs {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_number(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

Digraph parse_digraph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    const auto tokens = tokenize(view);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'n <count>'");
      }
      n = parse_number(tokens[1], line_no);
      if (n == 0 || n > (std::uint64_t{1} << 31)) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex count must be in [1, 2^31]");
      }
      have_header = true;
      continue;
    }

    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected an edge 'u v'");
    }
    const auto u = parse_number(tokens[0], line_no);
    const auto v = parse_number(tokens[1], line_no);
    if (u >= n || v >= n) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex out of range [0, " +
                       std::to_string(n) + ")");
    }
    if (u == v) {
      throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                       std::to_string(u));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) throw ParseError("missing header 'n <count>'");
  return Digraph(n, edges);
}

Digraph parse_digraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_digraph(in);
}

std::string format_digraph(const Digraph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string to_dot(const Digraph& g, std::string_view name) {
  std::string out = "digraph " + std::string(name) + " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : g.edges()) {
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace reachpairs
