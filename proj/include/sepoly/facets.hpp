#pragma once
/**
 * Facets of the symmetric edge polytope as layerings of the graph.
 *
 * A layering l with |l(u) - l(v)| <= 1 on every edge, whose non-flat edges
 * connect the whole vertex set, names one facet. Its non-flat edges point
 * from the lower layer to the higher one; flat edges are hidden.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepoly/errors.hpp"
#include "sepoly/graph.hpp"
#include "sepoly/numeric.hpp"

namespace sepoly {

using Layering = std::vector<int>;

struct FacetGraph {
  int id = -1;
  Layering layering;  // l(b0) == 0
  Orientation orient;

  std::vector<DirectedEdge> directed_edges(const Graph& g) const {
    std::vector<DirectedEdge> out;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (orient[e] != 0) out.push_back(directed_in(g, orient, e));
    }
    return out;
  }

  std::vector<EdgeId> hidden_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(orient.size()); ++e) {
      if (orient[e] == 0) out.push_back(e);
    }
    return out;
  }
};

inline Orientation orientation_of_layering(const Graph& g, const Layering& l) {
  Orientation o(g.num_edges(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.endpoints(e);
    int d = l[b] - l[a];
    if (d > 1 || d < -1) {
      throw std::invalid_argument("layering jumps by more than one along edge " +
                                  std::to_string(e));
    }
    o[e] = static_cast<std::int8_t>(d);
  }
  return o;
}

/// Builds the facet graph of `l`, shifted so that l(b0) = 0. Throws
/// std::invalid_argument if `l` does not define a facet.
inline FacetGraph facet_from_layering(const Graph& g, Layering l, Vertex b0, int id = -1) {
  if (static_cast<int>(l.size()) != g.num_vertices()) {
    throw std::invalid_argument("layering has the wrong length");
  }
  int shift = l[b0];
  for (int& x : l) x -= shift;
  auto o = orientation_of_layering(g, l);
  if (!present_edges_connect(g, o)) {
    throw std::invalid_argument("non-flat edges of the layering do not connect the graph");
  }
  return FacetGraph{id, std::move(l), std::move(o)};
}

/// All facet graphs, sorted lexicographically by layering (ids = positions).
inline std::vector<FacetGraph> enumerate_facet_graphs(const Graph& g, Vertex b0) {
  const int n = g.num_vertices();
  std::vector<Vertex> order{b0};
  std::vector<int> pos(n, -1);
  std::vector<Vertex> bfs_parent(n, -1);
  pos[b0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex x = order[i];
    for (EdgeId e : g.incident(x)) {
      Vertex y = g.other(e, x);
      if (pos[y] < 0) {
        pos[y] = static_cast<int>(order.size());
        bfs_parent[y] = x;
        order.push_back(y);
      }
    }
  }
  // complete_at[i]: vertices whose closed neighbourhood is fully assigned once
  // order[i] is; each must then own at least one non-flat edge.
  std::vector<std::vector<Vertex>> complete_at(n);
  for (Vertex v = 0; v < n; ++v) {
    int last = pos[v];
    for (EdgeId e : g.incident(v)) last = std::max(last, pos[g.other(e, v)]);
    complete_at[last].push_back(v);
  }

  std::vector<FacetGraph> out;
  Layering l(n, 0);
  auto has_step = [&](Vertex v) {
    for (EdgeId e : g.incident(v)) {
      if (l[g.other(e, v)] != l[v]) return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      auto o = orientation_of_layering(g, l);
      if (present_edges_connect(g, o)) out.push_back(FacetGraph{-1, l, std::move(o)});
      return;
    }
    Vertex v = order[i];
    int base = l[bfs_parent[v]];
    for (int cand = base - 1; cand <= base + 1; ++cand) {
      l[v] = cand;
      bool ok = true;
      for (EdgeId e : g.incident(v)) {
        Vertex u = g.other(e, v);
        if (pos[u] < i && (l[u] - cand > 1 || cand - l[u] > 1)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (Vertex w : complete_at[i]) {
        if (n > 1 && !has_step(w)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, i + 1);
    }
    l[v] = 0;
  };
  if (n == 1) return out;  // a point has no facets
  l[b0] = 0;
  rec(rec, 1);
  std::sort(out.begin(), out.end(),
            [](const FacetGraph& a, const FacetGraph& b) { return a.layering < b.layering; });
  for (int i = 0; i < static_cast<int>(out.size()); ++i) out[i].id = i;
  return out;
}

/// Layering certifying semi-balance of the present edges of `o`, normalised
/// at `b0`, or nullopt if some cycle is unbalanced. The present edges must
/// connect the vertex set.
inline std::optional<Layering> is_semi_balanced(const Graph& g, const Orientation& o,
                                                Vertex b0 = 0) {
  if (!present_edges_connect(g, o)) {
    throw std::invalid_argument("oriented subgraph is not weakly connected");
  }
  const int n = g.num_vertices();
  Layering l(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue{b0};
  seen[b0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex x = queue[i];
    for (EdgeId e : g.incident(x)) {
      if (o[e] == 0) continue;
      Vertex y = g.other(e, x);
      int want = head_of(g, o, e) == y ? l[x] + 1 : l[x] - 1;
      if (!seen[y]) {
        seen[y] = 1;
        l[y] = want;
        queue.push_back(y);
      } else if (l[y] != want) {
        return std::nullopt;
      }
    }
  }
  return l;
}

/// Facet graph of the layering -dist(b0, .): every edge that is not flat
/// points toward the base node.
inline FacetGraph first_facet_graph(const Graph& g, Vertex b0) {
  auto d = g.distances_from(b0);
  for (int& x : d) x = -x;
  return facet_from_layering(g, std::move(d), b0);
}

/// Vertex weights with f(b0) = 1, f(v) in [-1, 0] elsewhere, summing to zero.
struct WeightFunction {
  Vertex b0 = 0;
  std::vector<Rational> values;
  std::uint64_t seed = 0;  // seed actually used after tie rejection
};

inline Rational facet_value(const FacetGraph& fg, const WeightFunction& f) {
  if (fg.layering.size() != f.values.size()) {
    throw std::invalid_argument("facet and weight function live on different vertex sets");
  }
  Rational s = 0;
  for (std::size_t v = 0; v < f.values.size(); ++v) s += fg.layering[v] * f.values[v];
  return s;
}

/// Facet value of an arbitrary (not necessarily normalised) layering.
inline Rational layering_value(const Layering& l, const WeightFunction& f) {
  Rational s = 0;
  for (std::size_t v = 0; v < f.values.size(); ++v) s += l[v] * f.values[v];
  return s;
}

/// Draws f(v) = -a_v / sum(a) from the seed; rejects and advances the seed
/// while two facets of `facets` share a value.
inline WeightFunction make_weight_function(const Graph& g, Vertex b0, std::uint64_t seed,
                                           std::span<const FacetGraph> facets) {
  const int n = g.num_vertices();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    std::mt19937_64 rng(s);
    std::uniform_int_distribution<long long> draw(1, 1LL << 20);
    std::vector<long long> a(n, 0);
    long long total = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (v == b0) continue;
      a[v] = draw(rng);
      total += a[v];
    }
    WeightFunction f{b0, std::vector<Rational>(n), s};
    for (Vertex v = 0; v < n; ++v) {
      f.values[v] = v == b0 ? Rational(1) : Rational(-a[v], total);
    }
    if (n == 1) f.values[b0] = 0;
    std::vector<Rational> vals;
    vals.reserve(facets.size());
    for (const auto& fg : facets) vals.push_back(facet_value(fg, f));
    std::sort(vals.begin(), vals.end());
    if (std::adjacent_find(vals.begin(), vals.end()) == vals.end()) return f;
  }
  throw IntegrityError("could not draw a weight function separating all facets");
}

inline WeightFunction make_weight_function(const Graph& g, Vertex b0, std::uint64_t seed) {
  auto facets = enumerate_facet_graphs(g, b0);
  return make_weight_function(g, b0, seed, facets);
}

/// Conormal of the facet: <l, x> <= 1 on the polytope with equality
/// exactly on the facet.
inline std::vector<int> facet_conormal(const FacetGraph& fg) { return fg.layering; }

/// Sorts by decreasing facet value and relabels ids 1..M (id 1 is the
/// facet crossed first along the weight direction).
inline void order_by_weight(std::vector<FacetGraph>& facets, const WeightFunction& f) {
  std::vector<std::pair<Rational, std::size_t>> keyed;
  keyed.reserve(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) keyed.emplace_back(facet_value(facets[i], f), i);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    if (keyed[i].first == keyed[i - 1].first) throw IntegrityError("two facets tie on the weight function");
  }
  std::vector<FacetGraph> sorted;
  sorted.reserve(facets.size());
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    sorted.push_back(std::move(facets[keyed[i].second]));
    sorted.back().id = static_cast<int>(i) + 1;
  }
  facets = std::move(sorted);
}

}  // namespace sepoly
