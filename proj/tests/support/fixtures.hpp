#pragma once
// Small named graphs, including the three drawn examples with ribbon
// structures read off their planar drawings (counterclockwise order).

#include <map>
#include <utility>
#include <vector>

#include "sepoly/graph.hpp"

namespace fixtures {

using sepoly::Basis;
using sepoly::EdgeId;
using sepoly::Graph;
using sepoly::Ribbon;
using sepoly::Vertex;

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

/// Ribbon from per-vertex cyclic neighbour lists.
inline Ribbon ribbon_from_neighbors(const Graph& g, const std::vector<std::vector<Vertex>>& nbrs) {
  std::vector<std::vector<EdgeId>> orders;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    std::vector<EdgeId> row;
    for (Vertex u : nbrs[v]) row.push_back(*g.edge_between(v, u));
    orders.push_back(std::move(row));
  }
  return Ribbon(g, std::move(orders));
}

struct Drawn {
  Graph graph;
  Ribbon ribbon;
  Basis basis;
};

inline Graph path(int n) {
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph star(int leaves) {
  EdgeList e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

inline Graph cycle(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

inline Graph complete_bipartite(int a, int b) {
  EdgeList e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return Graph(a + b, e);
}

/// Seven vertices, nine edges, all oriented from {0,1,2} to {3,4,5,6}.
inline Drawn drawn_bipartite() {
  Graph g(7, {{0, 3}, {0, 5}, {1, 3}, {2, 4}, {1, 6}, {2, 5}, {0, 6}, {1, 4}, {2, 6}});
  auto r = ribbon_from_neighbors(
      g, {{3, 6, 5}, {3, 4, 6}, {5, 6, 4}, {1, 0}, {1, 2}, {0, 2}, {0, 1, 2}});
  return {g, r, Basis{0, *g.edge_between(0, 3)}};
}

/// Four-vertex diamond: 0 at the bottom, 3 left, 1 right, 2 on top, with
/// the chord 3-1.
inline Drawn drawn_diamond() {
  Graph g(4, {{3, 0}, {1, 0}, {2, 3}, {2, 1}, {3, 1}});
  auto r = ribbon_from_neighbors(g, {{1, 3}, {0, 2, 3}, {3, 1}, {0, 1, 2}});
  return {g, r, Basis{0, *g.edge_between(0, 1)}};
}

/// Eight-vertex planar graph used for greedy and stick-tree constructions.
inline Drawn drawn_greedy() {
  Graph g(8, {{1, 0}, {2, 0}, {3, 0}, {4, 2}, {5, 3}, {6, 3}, {7, 6}, {4, 1}, {5, 2}, {7, 5}, {4, 5}});
  auto r = ribbon_from_neighbors(g, {{3, 2, 1}, {0, 4}, {0, 5, 4}, {0, 6, 5}, {1, 2, 5},
                                     {2, 3, 7, 4}, {3, 7}, {5, 6}});
  return {g, r, Basis{0, *g.edge_between(0, 3)}};
}

}  // namespace fixtures
