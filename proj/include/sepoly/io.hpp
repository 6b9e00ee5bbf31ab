#pragma once
/**
 * Graph input (edge-list text or a JSON document) and JSON output of the
 * library's result types.
 *
 * Edge-list text: one "u v" pair per line; blank lines and lines starting
 * with '#' are ignored. JSON: {"n": 4, "edges": [[0,1],...],
 * "ribbon": [[edge ids at vertex 0], ...], "basis": [node, edge]}.
 */

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sepoly/errors.hpp"
#include "sepoly/facets.hpp"
#include "sepoly/graph.hpp"
#include "sepoly/jaeger.hpp"
#include "sepoly/poly.hpp"

namespace sepoly {

using Json = nlohmann::json;

struct ParsedGraph {
  Graph graph;
  std::optional<Ribbon> ribbon;
  std::optional<Basis> basis;
};

namespace detail {

inline void require_connected(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  for (int v = 1; v < n; ++v) {
    if (find(v) != find(0)) {
      throw ParseError("graph is disconnected: vertex " + std::to_string(v) +
                       " is not reachable from vertex 0");
    }
  }
}

inline void add_edge_checked(std::vector<std::pair<Vertex, Vertex>>& edges,
                             std::set<std::pair<Vertex, Vertex>>& seen, long long a, long long b,
                             const std::string& where) {
  if (a < 0 || b < 0 || a > 1000000 || b > 1000000) {
    throw ParseError(where + ": vertex ids must be small nonnegative integers");
  }
  if (a == b) throw ParseError(where + ": loop at vertex " + std::to_string(a));
  std::pair<Vertex, Vertex> key{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
  if (!seen.insert(key).second) {
    throw ParseError(where + ": duplicate edge " + std::to_string(a) + " " + std::to_string(b));
  }
  edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
}

inline Graph build_graph(int n, std::vector<std::pair<Vertex, Vertex>> edges) {
  if (n <= 0) throw ParseError("graph has no vertices");
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw ParseError("edge endpoint exceeds the vertex count");
  }
  require_connected(n, edges);
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline Ribbon ribbon_from_json(const Graph& g, const Json& j) {
  if (!j.is_array()) throw ParseError("ribbon must be an array of per-vertex edge lists");
  std::vector<std::vector<EdgeId>> orders;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("ribbon rows must be arrays of edge ids");
    orders.push_back(row.get<std::vector<EdgeId>>());
  }
  try {
    return Ribbon(g, std::move(orders));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid ribbon: ") + e.what());
  }
}

inline Basis basis_from_json(const Graph& g, const Json& j) {
  Basis b;
  if (j.is_array() && j.size() == 2) {
    b = {j[0].get<Vertex>(), j[1].get<EdgeId>()};
  } else if (j.is_object()) {
    b = {j.at("node").get<Vertex>(), j.at("edge").get<EdgeId>()};
  } else {
    throw ParseError("basis must be [node, edge] or {\"node\": .., \"edge\": ..}");
  }
  try {
    validate_basis(g, b);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid basis: ") + e.what());
  }
  return b;
}

}  // namespace detail

inline ParsedGraph parse_graph_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    const auto& je = j.at("edges");
    for (std::size_t i = 0; i < je.size(); ++i) {
      if (!je[i].is_array() || je[i].size() != 2) {
        throw ParseError("edge " + std::to_string(i) + ": expected a pair of vertex ids");
      }
      detail::add_edge_checked(edges, seen, je[i][0].get<long long>(), je[i][1].get<long long>(),
                               "edge " + std::to_string(i));
    }
    int n = 0;
    if (j.contains("n")) {
      n = j.at("n").get<int>();
    } else {
      for (auto [a, b] : edges) n = std::max({n, a + 1, b + 1});
    }
    ParsedGraph out{detail::build_graph(n, std::move(edges)), std::nullopt, std::nullopt};
    if (j.contains("ribbon")) out.ribbon = detail::ribbon_from_json(out.graph, j.at("ribbon"));
    if (j.contains("basis")) out.basis = detail::basis_from_json(out.graph, j.at("basis"));
    return out;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad graph document: ") + e.what());
  }
}

inline ParsedGraph parse_graph_text(const std::string& text) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long a = 0, b = 0;
    std::string extra;
    std::string where = "line " + std::to_string(lineno);
    if (!(ls >> a >> b) || (ls >> extra)) {
      throw ParseError(where + ": expected two vertex ids, got \"" + line + "\"");
    }
    detail::add_edge_checked(edges, seen, a, b, where);
    n = std::max({n, static_cast<int>(a) + 1, static_cast<int>(b) + 1});
  }
  if (edges.empty()) throw ParseError("no edges in input");
  return ParsedGraph{detail::build_graph(n, std::move(edges)), std::nullopt, std::nullopt};
}

/// JSON when the first non-blank character is '{', edge-list text otherwise.
inline ParsedGraph parse_graph(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
  return parse_graph_text(text);
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline ParsedGraph parse_graph_file(const std::string& path) { return parse_graph(read_file(path)); }

/// Ribbon from a JSON array of arrays, or one line of edge ids per vertex.
inline Ribbon parse_ribbon(const Graph& g, const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return detail::ribbon_from_json(g, Json::parse(text));
    } catch (const Json::exception& e) {
      throw ParseError(std::string("bad ribbon document: ") + e.what());
    }
  }
  std::vector<std::vector<EdgeId>> orders;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto f = line.find_first_not_of(" \t\r");
    if (f == std::string::npos || line[f] == '#') continue;
    std::istringstream ls(line);
    std::vector<EdgeId> row;
    EdgeId e = 0;
    while (ls >> e) row.push_back(e);
    orders.push_back(std::move(row));
  }
  try {
    return Ribbon(g, std::move(orders));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid ribbon: ") + e.what());
  }
}

/// "node,edge"
inline Basis parse_basis(const Graph& g, const std::string& text) {
  Basis b;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> b.node >> comma >> b.edge) || comma != ',') {
    throw ParseError("basis must be given as node,edge");
  }
  try {
    validate_basis(g, b);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid basis: ") + e.what());
  }
  return b;
}

inline Json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return Json(x.convert_to<std::int64_t>());
  }
  return Json(x.str());
}

inline Json to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(big_to_json(c));
  return a;
}

inline std::string rational_string(const Rational& q) {
  return denominator(q) == 1 ? numerator(q).str() : numerator(q).str() + "/" + denominator(q).str();
}

inline Json to_json(const Graph& g, const FacetGraph& fg, const WeightFunction& f) {
  Json d = Json::array();
  for (const auto& e : fg.directed_edges(g)) d.push_back({e.tail, e.head});
  return Json{{"id", fg.id},
              {"layering", fg.layering},
              {"directed_edges", d},
              {"hidden_edges", fg.hidden_edges()},
              {"f_value", rational_string(facet_value(fg, f))}};
}

inline Json to_json(const JaegerTree& t) {
  Json edges = Json::array();
  for (const auto& d : t.tree.edges) {
    bool tail = std::binary_search(t.tail_edges.begin(), t.tail_edges.end(), d.edge);
    edges.push_back(
        {{"edge", d.edge}, {"tail", d.tail}, {"head", d.head}, {"kind", tail ? "tail" : "head"}});
  }
  return Json{{"facet", t.facet}, {"edges", edges}, {"tail_count", t.tail_count}};
}

inline Json to_json(const std::vector<std::uint64_t>& h) { return Json(h); }

}  // namespace sepoly
