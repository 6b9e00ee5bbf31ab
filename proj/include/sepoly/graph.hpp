#pragma once
/**
 * Graph, ribbon-structure and tour primitives.
 *
 * Vertices are dense ids 0..n-1 and edges dense ids 0..m-1. An oriented
 * subgraph of a graph is stored as one signed byte per edge: +1 when the
 * edge points from its first stored endpoint to its second, -1 for the
 * reverse, 0 when the edge is hidden (absent from the subgraph).
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sepoly {

using Vertex = int;
using EdgeId = int;

class Graph {
 public:
  Graph() = default;

  /// Builds a simple connected graph. Throws std::invalid_argument on loops,
  /// repeated pairs, out-of-range endpoints or disconnection.
  Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
    incident_.assign(n_, {});
    for (EdgeId e = 0; e < num_edges(); ++e) {
      auto [u, v] = edges_[e];
      if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw std::invalid_argument("edge " + std::to_string(e) + " has an endpoint out of range");
      }
      if (u == v) throw std::invalid_argument("edge " + std::to_string(e) + " is a loop");
      incident_[u].push_back(e);
      incident_[v].push_back(e);
    }
    for (Vertex v = 0; v < n_; ++v) {
      std::vector<Vertex> nb;
      for (EdgeId e : incident_[v]) nb.push_back(other(e, v));
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
        throw std::invalid_argument("repeated edge at vertex " + std::to_string(v));
      }
    }
    if (!connected()) throw std::invalid_argument("graph is not connected");
  }

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  /// g = m - n + 1.
  int cyclomatic_number() const noexcept { return num_edges() - n_ + 1; }

  std::pair<Vertex, Vertex> endpoints(EdgeId e) const { return edges_.at(e); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }

  bool incident_to(EdgeId e, Vertex v) const {
    auto [a, b] = edges_.at(e);
    return a == v || b == v;
  }

  Vertex other(EdgeId e, Vertex v) const {
    auto [a, b] = edges_[e];
    if (a == v) return b;
    if (b == v) return a;
    throw std::invalid_argument("edge " + std::to_string(e) + " is not incident to vertex " +
                                std::to_string(v));
  }

  std::span<const EdgeId> incident(Vertex v) const { return incident_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(incident_.at(v).size()); }

  std::optional<EdgeId> edge_between(Vertex u, Vertex v) const {
    for (EdgeId e : incident_.at(u)) {
      if (other(e, u) == v) return e;
    }
    return std::nullopt;
  }

  /// Breadth-first distances from `src`.
  std::vector<int> distances_from(Vertex src) const {
    std::vector<int> dist(n_, -1);
    std::vector<Vertex> queue{src};
    dist[src] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex x = queue[i];
      for (EdgeId e : incident_[x]) {
        Vertex y = other(e, x);
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    return dist;
  }

 private:
  bool connected() const {
    auto d = distances_from(0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
  }

  int n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// Cyclic order of the incident edges at every vertex.
class Ribbon {
 public:
  Ribbon() = default;

  Ribbon(const Graph& g, std::vector<std::vector<EdgeId>> order) : order_(std::move(order)) {
    if (static_cast<int>(order_.size()) != g.num_vertices()) {
      throw std::invalid_argument("ribbon must list a cyclic order for every vertex");
    }
    slot_.assign(g.num_edges(), {-1, -1});
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto expected = std::vector<EdgeId>(g.incident(v).begin(), g.incident(v).end());
      auto given = order_[v];
      std::sort(expected.begin(), expected.end());
      std::sort(given.begin(), given.end());
      if (expected != given) {
        throw std::invalid_argument("ribbon order at vertex " + std::to_string(v) +
                                    " is not a permutation of its incident edges");
      }
      for (int i = 0; i < static_cast<int>(order_[v].size()); ++i) {
        EdgeId e = order_[v][i];
        slot_[e][g.endpoints(e).first == v ? 0 : 1] = i;
      }
    }
    ends_.reserve(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) ends_.push_back(g.endpoints(e));
  }

  /// Incident edges sorted by the id of the opposite endpoint.
  static Ribbon by_neighbor_id(const Graph& g) {
    std::vector<std::vector<EdgeId>> order(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      order[v].assign(g.incident(v).begin(), g.incident(v).end());
      std::sort(order[v].begin(), order[v].end(),
                [&](EdgeId a, EdgeId b) { return g.other(a, v) < g.other(b, v); });
    }
    return Ribbon(g, std::move(order));
  }

  /// The edge following `e` in the cyclic order at `v`.
  EdgeId next(Vertex v, EdgeId e) const {
    if (e < 0 || e >= static_cast<EdgeId>(ends_.size()) ||
        (ends_[e].first != v && ends_[e].second != v)) {
      throw std::invalid_argument("edge " + std::to_string(e) + " is not incident to vertex " +
                                  std::to_string(v));
    }
    const auto& ord = order_[v];
    int i = slot_[e][ends_[e].first == v ? 0 : 1];
    return ord[(i + 1) % static_cast<int>(ord.size())];
  }

  const std::vector<EdgeId>& order(Vertex v) const { return order_.at(v); }
  const std::vector<std::vector<EdgeId>>& orders() const noexcept { return order_; }

 private:
  std::vector<std::vector<EdgeId>> order_;
  std::vector<std::array<int, 2>> slot_;
  std::vector<std::pair<Vertex, Vertex>> ends_;
};

/// Base node and base edge of a tour.
struct Basis {
  Vertex node = 0;
  EdgeId edge = 0;
  friend bool operator==(const Basis&, const Basis&) = default;
};

inline void validate_basis(const Graph& g, const Basis& b) {
  if (b.node < 0 || b.node >= g.num_vertices() || b.edge < 0 || b.edge >= g.num_edges() ||
      !g.incident_to(b.edge, b.node)) {
    throw std::invalid_argument("basis edge must be incident to the base node");
  }
}

/// b0 = 0 and the first edge at b0 in the ribbon order.
inline Basis default_basis(const Graph& g, const Ribbon& r) {
  if (g.num_edges() == 0) throw std::invalid_argument("a basis needs at least one edge");
  return Basis{0, r.order(0).front()};
}

struct DirectedEdge {
  EdgeId edge = -1;
  Vertex tail = -1;
  Vertex head = -1;

  DirectedEdge reversed() const { return {edge, head, tail}; }
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

inline DirectedEdge make_directed(const Graph& g, EdgeId e, Vertex tail) {
  return DirectedEdge{e, tail, g.other(e, tail)};
}

/// Per-edge orientation of a spanning oriented subgraph (+1 / -1 / 0 hidden).
using Orientation = std::vector<std::int8_t>;

inline bool is_present(const Orientation& o, EdgeId e) { return o[e] != 0; }

inline Vertex tail_of(const Graph& g, const Orientation& o, EdgeId e) {
  auto [a, b] = g.endpoints(e);
  return o[e] > 0 ? a : b;
}

inline Vertex head_of(const Graph& g, const Orientation& o, EdgeId e) {
  auto [a, b] = g.endpoints(e);
  return o[e] > 0 ? b : a;
}

inline DirectedEdge directed_in(const Graph& g, const Orientation& o, EdgeId e) {
  if (o.at(e) == 0) throw std::invalid_argument("edge " + std::to_string(e) + " is hidden");
  return {e, tail_of(g, o, e), head_of(g, o, e)};
}

/// Sign that orients `d` within the stored endpoint convention.
inline std::int8_t sign_of(const Graph& g, const DirectedEdge& d) {
  auto [a, b] = g.endpoints(d.edge);
  if (d.tail == a && d.head == b) return 1;
  if (d.tail == b && d.head == a) return -1;
  throw std::invalid_argument("directed edge does not match the endpoints of edge " +
                              std::to_string(d.edge));
}

/// A spanning tree given as directed edges (orientation from its host).
struct SpanningTree {
  std::vector<DirectedEdge> edges;  // sorted by edge id
  int facet = -1;

  bool contains(EdgeId e) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), e,
                               [](const DirectedEdge& d, EdgeId x) { return d.edge < x; });
    return it != edges.end() && it->edge == e;
  }
  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

inline SpanningTree make_tree(std::vector<DirectedEdge> edges, int facet = -1) {
  std::sort(edges.begin(), edges.end());
  return SpanningTree{std::move(edges), facet};
}

/// Tree edges of `mask` oriented as in the host.
inline SpanningTree tree_from_mask(const Graph& g, const Orientation& host,
                                   const std::vector<char>& mask, int facet = -1) {
  SpanningTree t{{}, facet};
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (mask[e]) t.edges.push_back(directed_in(g, host, e));
  }
  return t;
}

inline std::vector<char> tree_mask(const Graph& g, const SpanningTree& t) {
  std::vector<char> mask(g.num_edges(), 0);
  for (const auto& d : t.edges) mask.at(d.edge) = 1;
  return mask;
}

/// Union-find acyclicity and spanning check on an undirected edge set.
inline bool spans_as_tree(const Graph& g, std::span<const EdgeId> edges) {
  if (static_cast<int>(edges.size()) != g.num_vertices() - 1) return false;
  std::vector<int> parent(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e : edges) {
    auto [a, b] = g.endpoints(e);
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

/// Throws std::invalid_argument unless `t` is a spanning tree of `host`
/// with matching edge orientations.
inline void validate_tree(const Graph& g, const Orientation& host, const SpanningTree& t) {
  std::vector<EdgeId> ids;
  for (const auto& d : t.edges) {
    if (d.edge < 0 || d.edge >= g.num_edges()) throw std::invalid_argument("tree edge out of range");
    if (host[d.edge] == 0 || host[d.edge] != sign_of(g, d)) {
      throw std::invalid_argument("tree edge " + std::to_string(d.edge) +
                                  " is not an edge of the host digraph");
    }
    ids.push_back(d.edge);
  }
  if (!spans_as_tree(g, ids)) throw std::invalid_argument("edge set is not a spanning tree");
}

enum class StepKind : std::uint8_t { traverse, skip, hidden };

struct TourStep {
  Vertex node = -1;
  EdgeId edge = -1;
  StepKind kind = StepKind::skip;
  friend bool operator==(const TourStep&, const TourStep&) = default;
};

using TourTrace = std::vector<TourStep>;

/// Incremental walk along the tour of a tree in the full graph. Hidden edges
/// of the host are reported and skipped; the walk ends just before the base
/// pair would recur.
class TourWalker {
 public:
  TourWalker(const Graph& g, const Orientation& host, const Ribbon& r, const Basis& b,
             const std::vector<char>& in_tree)
      : g_(&g), host_(&host), r_(&r), in_tree_(&in_tree), start_{b.node, b.edge},
        cur_{b.node, b.edge} {}

  bool done() const noexcept { return done_; }

  TourStep current() const {
    StepKind k = (*host_)[cur_.second] == 0 ? StepKind::hidden
                 : (*in_tree_)[cur_.second]  ? StepKind::traverse
                                             : StepKind::skip;
    return {cur_.first, cur_.second, k};
  }

  void advance() {
    auto [x, e] = cur_;
    if ((*host_)[e] != 0 && (*in_tree_)[e]) {
      Vertex y = g_->other(e, x);
      cur_ = {y, r_->next(y, e)};
    } else {
      cur_ = {x, r_->next(x, e)};
    }
    if (cur_ == start_ || ++steps_ > 2 * g_->num_edges()) done_ = true;
  }

 private:
  const Graph* g_;
  const Orientation* host_;
  const Ribbon* r_;
  const std::vector<char>* in_tree_;
  std::pair<Vertex, EdgeId> start_;
  std::pair<Vertex, EdgeId> cur_;
  int steps_ = 0;
  bool done_ = false;
};

/// Bernardi tour of `t`. With `track_hidden` the walk runs in the full graph
/// and hidden edges appear as StepKind::hidden entries; without it they are
/// dropped, which is the tour in the host with the restricted ribbon.
inline TourTrace tour_of_tree(const Graph& g, const Orientation& host, const Ribbon& r,
                              const Basis& b, const SpanningTree& t, bool track_hidden = false) {
  validate_basis(g, b);
  validate_tree(g, host, t);
  auto mask = tree_mask(g, t);
  TourTrace trace;
  trace.reserve(2 * g.num_edges());
  for (TourWalker w(g, host, r, b, mask); !w.done(); w.advance()) {
    auto s = w.current();
    if (s.kind != StepKind::hidden || track_hidden) trace.push_back(s);
  }
  return trace;
}

enum class TreeEdgeKind : std::uint8_t { tail_edge, head_edge };

/// Rooted structure of a tree at the base node: parent vertex and the edge
/// to it, plus a breadth-first order.
struct RootedTree {
  std::vector<Vertex> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<Vertex> order;
};

inline RootedTree root_tree(const Graph& g, const std::vector<char>& mask, Vertex root) {
  RootedTree rt{std::vector<Vertex>(g.num_vertices(), -1),
                std::vector<EdgeId>(g.num_vertices(), -1), {root}};
  std::vector<char> seen(g.num_vertices(), 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < rt.order.size(); ++i) {
    Vertex x = rt.order[i];
    for (EdgeId e : g.incident(x)) {
      if (!mask[e]) continue;
      Vertex y = g.other(e, x);
      if (seen[y]) continue;
      seen[y] = 1;
      rt.parent[y] = x;
      rt.parent_edge[y] = e;
      rt.order.push_back(y);
    }
  }
  return rt;
}

/// Tail-edge / head-edge status for each edge of `t` (aligned with t.edges):
/// a directed tree edge is a tail-edge when its tail is on the b0 side.
inline std::vector<TreeEdgeKind> classify_tree_edges(const Graph& g, const SpanningTree& t,
                                                     Vertex b0) {
  auto mask = tree_mask(g, t);
  auto rt = root_tree(g, mask, b0);
  if (static_cast<int>(rt.order.size()) != g.num_vertices()) {
    throw std::invalid_argument("edge set is not a spanning tree");
  }
  std::vector<TreeEdgeKind> out;
  out.reserve(t.edges.size());
  for (const auto& d : t.edges) {
    // the far endpoint from b0 has this edge as its parent edge
    bool tail_near = rt.parent_edge[d.head] == d.edge;
    out.push_back(tail_near ? TreeEdgeKind::tail_edge : TreeEdgeKind::head_edge);
  }
  return out;
}

/// Vertex bipartition; side[v] == 0 for V0, 1 for V1.
struct Cut {
  std::vector<char> side;

  bool in_v0(Vertex v) const { return side[v] == 0; }
  friend bool operator==(const Cut&, const Cut&) = default;
};

/// Components of t - e, with the base node on side 0.
inline Cut fundamental_cut(const Graph& g, const SpanningTree& t, EdgeId e, Vertex b0) {
  if (!t.contains(e)) throw std::invalid_argument("edge " + std::to_string(e) + " is not in the tree");
  auto mask = tree_mask(g, t);
  mask[e] = 0;
  Cut c{std::vector<char>(g.num_vertices(), 1)};
  std::vector<Vertex> stack{b0};
  c.side[b0] = 0;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (EdgeId f : g.incident(x)) {
      if (!mask[f]) continue;
      Vertex y = g.other(f, x);
      if (c.side[y] == 1) {
        c.side[y] = 0;
        stack.push_back(y);
      }
    }
  }
  return c;
}

enum class CutDirection : std::uint8_t { toward_v1, toward_v0, undirected, empty };

inline CutDirection is_directed_cut(const Graph& g, const Orientation& host, const Cut& cut) {
  if (static_cast<int>(cut.side.size()) != g.num_vertices()) {
    throw std::invalid_argument("cut does not cover the vertex set");
  }
  int n0 = static_cast<int>(std::count(cut.side.begin(), cut.side.end(), 0));
  if (n0 == 0 || n0 == g.num_vertices()) throw std::invalid_argument("cut side is empty");
  bool to1 = false, to0 = false;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (host[e] == 0) continue;
    Vertex t = tail_of(g, host, e), h = head_of(g, host, e);
    if (cut.side[t] == cut.side[h]) continue;
    (cut.side[h] == 1 ? to1 : to0) = true;
  }
  if (to1 && to0) return CutDirection::undirected;
  if (to1) return CutDirection::toward_v1;
  if (to0) return CutDirection::toward_v0;
  return CutDirection::empty;
}

inline bool is_directed(CutDirection d) {
  return d == CutDirection::toward_v0 || d == CutDirection::toward_v1;
}

/// Connectivity of the subgraph formed by the present edges of `o`.
inline bool present_edges_connect(const Graph& g, const Orientation& o) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      if (o[e] == 0) continue;
      Vertex y = g.other(e, x);
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == g.num_vertices();
}

/// Calls visit(edge ids) for every spanning tree of `g` (include/exclude
/// recursion over edge ids with union-find rollback).
template <class Visit>
void for_each_spanning_tree(const Graph& g, Visit&& visit) {
  const int n = g.num_vertices(), m = g.num_edges();
  std::vector<int> parent(n), size(n, 1);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::vector<EdgeId> chosen;
  auto rec = [&](auto&& self, EdgeId e) -> void {
    if (static_cast<int>(chosen.size()) == n - 1) {
      visit(std::span<const EdgeId>(chosen));
      return;
    }
    if (e == m || m - e < n - 1 - static_cast<int>(chosen.size())) return;
    auto [a, b] = g.endpoints(e);
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      if (size[ra] > size[rb]) std::swap(ra, rb);
      parent[ra] = rb;
      size[rb] += size[ra];
      chosen.push_back(e);
      self(self, e + 1);
      chosen.pop_back();
      size[rb] -= size[ra];
      parent[ra] = ra;
    }
    self(self, e + 1);
  };
  rec(rec, 0);
}

}  // namespace sepoly
