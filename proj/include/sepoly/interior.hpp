#pragma once
/**
 * Interior polynomials of facet digraphs, the h* pipeline report, and the
 * product formulas for graphs glued along an edge or a vertex.
 */

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sepoly/context.hpp"
#include "sepoly/errors.hpp"
#include "sepoly/facets.hpp"
#include "sepoly/graph.hpp"
#include "sepoly/jaeger.hpp"
#include "sepoly/poly.hpp"

namespace sepoly {

/// Coefficient i counts Jaeger trees of `fg` with exactly i tail-edges whose
/// fundamental cut (inside fg) is not directed.
inline IntPolynomial interior_polynomial(const Graph& g, const FacetGraph& fg, const Ribbon& r,
                                         const Basis& b) {
  std::vector<BigInt> c(static_cast<std::size_t>(g.num_vertices()), 0);
  for_each_jaeger_tree(g, fg, r, b, [&](const JaegerFound& f) {
    std::vector<char> mask(f.in_tree.begin(), f.in_tree.end());
    int k = 0;
    for (EdgeId e : f.tail_edges) {
      // a tail-edge's head is on the far side from the base node
      Vertex low = head_of(g, fg.orient, e);
      Cut cut{std::vector<char>(g.num_vertices(), 0)};
      std::vector<Vertex> stack{low};
      cut.side[low] = 1;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (EdgeId t : g.incident(v)) {
          if (!mask[t] || t == e) continue;
          Vertex w = g.other(t, v);
          if (!cut.side[w]) {
            cut.side[w] = 1;
            stack.push_back(w);
          }
        }
      }
      if (!is_directed(is_directed_cut(g, fg.orient, cut))) ++k;
    }
    c.at(static_cast<std::size_t>(k)) += 1;
  });
  return IntPolynomial(std::move(c));
}

/// Two-colouring with vertex 0 in class 0, or nullopt for odd cycles.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> col(g.num_vertices(), -1);
  std::vector<Vertex> queue{0};
  col[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex x = queue[i];
    for (EdgeId e : g.incident(x)) {
      Vertex y = g.other(e, x);
      if (col[y] < 0) {
        col[y] = 1 - col[x];
        queue.push_back(y);
      } else if (col[y] == col[x]) {
        return std::nullopt;
      }
    }
  }
  return col;
}

/// Interior polynomial of the standard orientation (class of vertex 0 toward
/// the other class). The mirrored orientation must give the same result.
inline IntPolynomial interior_of_bipartite(const Graph& g, const Ribbon& r, const Basis& b) {
  auto col = bipartition(g);
  if (!col) throw DomainError("graph is not bipartite");
  Layering up(col->begin(), col->end());
  Layering down(up);
  for (int& x : down) x = -x;
  auto p = interior_polynomial(g, facet_from_layering(g, up, b.node), r, b);
  auto q = interior_polynomial(g, facet_from_layering(g, down, b.node), r, b);
  if (p != q) {
    throw IntegrityError("the two standard orientations disagree: " + p.to_string() + " vs " +
                         q.to_string());
  }
  return p;
}

struct HStarReport {
  IntPolynomial hstar;
  IntPolynomial gamma;
  BigInt volume;
  TailHistogram histogram;
  std::vector<std::uint64_t> per_facet;  // index = facet id - 1
};

inline HStarReport hstar_report(const Context& ctx) {
  auto [h, per] = tail_histogram(ctx);
  HStarReport rep;
  rep.hstar = hstar_from_histogram(h, ctx.graph.num_vertices());
  rep.gamma = gamma_transform(rep.hstar);
  rep.volume = rep.hstar.eval(1);
  rep.histogram = std::move(h);
  rep.per_facet = std::move(per);
  return rep;
}

/// An edge list over arbitrary integer vertex labels.
using LabeledEdges = std::vector<std::pair<int, int>>;

/// Relabels to 0..k-1 in increasing label order.
inline Graph graph_from_labels(const LabeledEdges& edges) {
  std::set<int> labels;
  for (auto [a, b] : edges) {
    labels.insert(a);
    labels.insert(b);
  }
  std::map<int, Vertex> id;
  for (int l : labels) id.emplace(l, static_cast<Vertex>(id.size()));
  std::vector<std::pair<Vertex, Vertex>> out;
  for (auto [a, b] : edges) out.emplace_back(id[a], id[b]);
  return Graph(static_cast<int>(labels.size()), std::move(out));
}

enum class GlueKind : std::uint8_t { edge, vertex };

struct GlueReport {
  GlueKind kind = GlueKind::edge;
  IntPolynomial gamma1, gamma2, gamma_union;
  IntPolynomial interior1, interior2, interior_union;
  bool gamma_ok = false;
  bool interior_ok = false;
};

/// Glues two bipartite graphs along their common labels (one shared edge, or
/// one shared vertex) and compares gamma and interior polynomials of the
/// union against the products.
inline GlueReport glue_product_check(const LabeledEdges& e1, const LabeledEdges& e2) {
  auto vertices = [](const LabeledEdges& es) {
    std::set<int> s;
    for (auto [a, b] : es) {
      s.insert(a);
      s.insert(b);
    }
    return s;
  };
  auto v1 = vertices(e1), v2 = vertices(e2);
  std::vector<int> common;
  std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(common));
  auto norm = [](std::pair<int, int> p) {
    return p.first < p.second ? p : std::pair<int, int>{p.second, p.first};
  };
  std::set<std::pair<int, int>> s1, s2;
  for (auto p : e1) s1.insert(norm(p));
  for (auto p : e2) s2.insert(norm(p));
  GlueReport rep;
  if (common.size() == 1) {
    rep.kind = GlueKind::vertex;
  } else if (common.size() == 2) {
    auto shared = norm({common[0], common[1]});
    if (!s1.count(shared) || !s2.count(shared)) {
      throw std::invalid_argument("the two shared vertices must span an edge of both graphs");
    }
    rep.kind = GlueKind::edge;
  } else {
    throw std::invalid_argument("graphs must share exactly one edge or one vertex");
  }
  std::set<std::pair<int, int>> all(s1);
  all.insert(s2.begin(), s2.end());
  LabeledEdges joined(all.begin(), all.end());

  auto run = [](const LabeledEdges& es, IntPolynomial& gamma, IntPolynomial& interior) {
    auto ctx = make_context(graph_from_labels(es));
    gamma = hstar_report(ctx).gamma;
    interior = interior_of_bipartite(ctx.graph, ctx.ribbon, ctx.basis);
  };
  run(LabeledEdges(s1.begin(), s1.end()), rep.gamma1, rep.interior1);
  run(LabeledEdges(s2.begin(), s2.end()), rep.gamma2, rep.interior2);
  run(joined, rep.gamma_union, rep.interior_union);
  rep.gamma_ok = rep.gamma_union == rep.gamma1 * rep.gamma2;
  rep.interior_ok = rep.interior_union == rep.interior1 * rep.interior2;
  return rep;
}

}  // namespace sepoly
