#pragma once
/**
 * Jaeger trees: recognition, branching enumeration, greedy and stick-tree
 * constructions, and the two shelling orders.
 *
 * A spanning tree T of a facet graph is a Jaeger tree when the tour of T
 * meets every present non-tree edge first at its tail.
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "sepoly/context.hpp"
#include "sepoly/errors.hpp"
#include "sepoly/facets.hpp"
#include "sepoly/graph.hpp"

namespace sepoly {

struct JaegerTree {
  SpanningTree tree;
  int facet = -1;
  std::vector<EdgeId> tail_edges;  // sorted
  int tail_count = 0;

  friend bool operator==(const JaegerTree& a, const JaegerTree& b) {
    return a.facet == b.facet && a.tree.edges == b.tree.edges;
  }
};

/// h[i] = number of Jaeger trees over all facets with exactly i tail-edges.
using TailHistogram = std::vector<std::uint64_t>;

struct JaegerCheck {
  bool is_jaeger = false;
  std::optional<TourStep> violation;  // the pair (head, e) reached too early
};

inline JaegerCheck is_jaeger_tree(const Graph& g, const FacetGraph& fg, const Ribbon& r,
                                  const Basis& b, const SpanningTree& t) {
  auto trace = tour_of_tree(g, fg.orient, r, b, t);
  std::vector<char> seen(g.num_edges(), 0);
  for (const auto& s : trace) {
    if (seen[s.edge]) continue;
    seen[s.edge] = 1;
    if (s.kind == StepKind::skip && head_of(g, fg.orient, s.edge) == s.node) {
      return {false, s};
    }
  }
  return {true, std::nullopt};
}

/// Tail-edges of `t` read from its tour: tree edges first traversed from
/// their tail.
inline std::vector<EdgeId> tail_edges_by_tour(const Graph& g, const FacetGraph& fg,
                                              const Ribbon& r, const Basis& b,
                                              const SpanningTree& t) {
  auto trace = tour_of_tree(g, fg.orient, r, b, t);
  std::vector<char> seen(g.num_edges(), 0);
  std::vector<EdgeId> out;
  for (const auto& s : trace) {
    if (seen[s.edge]) continue;
    seen[s.edge] = 1;
    if (s.kind == StepKind::traverse && tail_of(g, fg.orient, s.edge) == s.node) {
      out.push_back(s.edge);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline JaegerTree make_jaeger_tree(const Graph& g, const FacetGraph& fg, const Ribbon& r,
                                   const Basis& b, SpanningTree t) {
  t.facet = fg.id;
  auto tails = tail_edges_by_tour(g, fg, r, b, t);
  int k = static_cast<int>(tails.size());
  return JaegerTree{std::move(t), fg.id, std::move(tails), k};
}

/// A tree found by the enumerator, valid only during the visitor call.
struct JaegerFound {
  const std::vector<std::int8_t>& in_tree;  // 1 on tree edges
  const std::vector<EdgeId>& tail_edges;    // in tour order
};

namespace detail {

struct BranchState {
  std::vector<std::int8_t> decision;  // 0 undecided, 1 in, 2 out
  std::vector<char> visited;
  std::vector<EdgeId> tails;
  int visited_count = 0;
  Vertex x = -1;
  EdgeId e = -1;
};

class JaegerEnumerator {
 public:
  JaegerEnumerator(const Graph& g, const FacetGraph& fg, const Ribbon& r, const Basis& b)
      : g_(g), fg_(fg), r_(r), b_(b) {}

  template <class Visit>
  void run(Visit&& visit) {
    BranchState s;
    s.decision.assign(g_.num_edges(), 0);
    s.visited.assign(g_.num_vertices(), 0);
    s.visited[b_.node] = 1;
    s.visited_count = 1;
    s.x = b_.node;
    s.e = b_.edge;
    walk(s, visit);
  }

 private:
  // Every unvisited vertex must still be reachable through edges not
  // committed out.
  bool can_span(const BranchState& s) const {
    if (s.visited_count == g_.num_vertices()) return true;
    std::vector<char> seen = s.visited;
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (seen[v]) stack.push_back(v);
    }
    int count = s.visited_count;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (EdgeId f : g_.incident(v)) {
        if (fg_.orient[f] == 0 || s.decision[f] == 2) continue;
        Vertex w = g_.other(f, v);
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == g_.num_vertices();
  }

  void step_skip(BranchState& s) const { s.e = r_.next(s.x, s.e); }

  void step_traverse(BranchState& s) const {
    s.x = g_.other(s.e, s.x);
    s.e = r_.next(s.x, s.e);
  }

  template <class Visit>
  void walk(BranchState& s, Visit& visit) {
    while (true) {
      const EdgeId e = s.e;
      const Vertex x = s.x;
      if (fg_.orient[e] == 0 || s.decision[e] == 2) {
        step_skip(s);
      } else if (s.decision[e] == 1) {
        step_traverse(s);
      } else {
        const Vertex y = g_.other(e, x);
        if (head_of(g_, fg_.orient, e) == x) {
          // first seen at its head: must be a tree edge
          if (s.visited[y]) return;
          s.decision[e] = 1;
          s.visited[y] = 1;
          ++s.visited_count;
          step_traverse(s);
        } else if (s.visited[y]) {
          s.decision[e] = 2;
          if (!can_span(s)) return;
          step_skip(s);
        } else {
          BranchState in = s;
          in.decision[e] = 1;
          in.visited[y] = 1;
          ++in.visited_count;
          in.tails.push_back(e);
          step_traverse(in);
          s.decision[e] = 2;
          if (can_span(s)) {
            step_skip(s);
            if (!(s.x == b_.node && s.e == b_.edge)) {
              walk(s, visit);
            } else {
              finish(s, visit);
            }
          }
          if (!(in.x == b_.node && in.e == b_.edge)) {
            walk(in, visit);
          } else {
            finish(in, visit);
          }
          return;
        }
      }
      if (s.x == b_.node && s.e == b_.edge) {
        finish(s, visit);
        return;
      }
    }
  }

  template <class Visit>
  void finish(const BranchState& s, Visit& visit) const {
    if (s.visited_count != g_.num_vertices()) return;
    std::vector<std::int8_t> mask(g_.num_edges(), 0);
    for (EdgeId e = 0; e < g_.num_edges(); ++e) mask[e] = s.decision[e] == 1;
    visit(JaegerFound{mask, s.tails});
  }

  const Graph& g_;
  const FacetGraph& fg_;
  const Ribbon& r_;
  const Basis& b_;
};

}  // namespace detail

/// Streams the Jaeger trees of `fg` in increasing order within the facet.
template <class Visit>
void for_each_jaeger_tree(const Graph& g, const FacetGraph& fg, const Ribbon& r, const Basis& b,
                          Visit&& visit) {
  validate_basis(g, b);
  if (g.num_vertices() == 1) return;
  detail::JaegerEnumerator en(g, fg, r, b);
  en.run(visit);
}

inline JaegerTree jaeger_from_found(const Graph& g, const FacetGraph& fg, const JaegerFound& f) {
  JaegerTree jt;
  jt.facet = fg.id;
  jt.tree.facet = fg.id;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (f.in_tree[e]) jt.tree.edges.push_back(directed_in(g, fg.orient, e));
  }
  jt.tail_edges = f.tail_edges;
  std::sort(jt.tail_edges.begin(), jt.tail_edges.end());
  jt.tail_count = static_cast<int>(jt.tail_edges.size());
  return jt;
}

inline std::vector<JaegerTree> enumerate_jaeger_trees(const Graph& g, const FacetGraph& fg,
                                                      const Ribbon& r, const Basis& b) {
  std::vector<JaegerTree> out;
  for_each_jaeger_tree(g, fg, r, b,
                       [&](const JaegerFound& f) { out.push_back(jaeger_from_found(g, fg, f)); });
  return out;
}

struct AllJaeger {
  std::vector<JaegerTree> trees;              // facet by facet, in facet id order
  TailHistogram histogram;
  std::vector<std::uint64_t> per_facet;       // index = facet id - 1
};

inline AllJaeger enumerate_all_jaeger(const Context& ctx) {
  AllJaeger all;
  all.histogram.assign(static_cast<std::size_t>(ctx.graph.num_vertices()), 0);
  for (const auto& fg : ctx.facets) {
    std::uint64_t count = 0;
    for_each_jaeger_tree(ctx.graph, fg, ctx.ribbon, ctx.basis, [&](const JaegerFound& f) {
      all.trees.push_back(jaeger_from_found(ctx.graph, fg, f));
      ++all.histogram.at(f.tail_edges.size());
      ++count;
    });
    all.per_facet.push_back(count);
  }
  return all;
}

/// Histogram and per-facet counts without materialising the trees.
inline std::pair<TailHistogram, std::vector<std::uint64_t>> tail_histogram(const Context& ctx) {
  TailHistogram h(static_cast<std::size_t>(ctx.graph.num_vertices()), 0);
  std::vector<std::uint64_t> per;
  for (const auto& fg : ctx.facets) {
    std::uint64_t count = 0;
    for_each_jaeger_tree(ctx.graph, fg, ctx.ribbon, ctx.basis, [&](const JaegerFound& f) {
      ++h.at(f.tail_edges.size());
      ++count;
    });
    per.push_back(count);
  }
  return {std::move(h), std::move(per)};
}

using GreedyResult = std::variant<SpanningTree, Cut>;

namespace detail {

inline GreedyResult grow_greedy(const Graph& g, const FacetGraph& fg, const Ribbon& r,
                                const Basis& b, std::optional<DirectedEdge> forced) {
  validate_basis(g, b);
  const int m = g.num_edges();
  std::vector<char> in_tree(m, 0);
  std::vector<char> reached(g.num_vertices(), 0);
  std::vector<std::array<char, 2>> seen(m, {0, 0});
  auto side = [&](Vertex x, EdgeId e) { return g.endpoints(e).first == x ? 0 : 1; };
  auto include = [&](EdgeId e, Vertex y) {
    if (reached[y]) throw IntegrityError("greedy construction closed a cycle");
    in_tree[e] = 1;
    reached[y] = 1;
  };
  reached[b.node] = 1;
  Vertex x = b.node;
  EdgeId e = b.edge;
  while (true) {
    seen[e][side(x, e)] = 1;
    Vertex y = g.other(e, x);
    bool traverse = false;
    if (fg.orient[e] != 0) {
      bool y_seen = seen[e][side(y, e)];
      if (in_tree[e]) {
        traverse = true;
      } else if (head_of(g, fg.orient, e) == x) {
        if (!y_seen) {
          include(e, y);
          traverse = true;
        }
      } else if (forced && forced->edge == e && !y_seen) {
        include(e, y);
        traverse = true;
      } else if (y_seen) {
        throw IntegrityError("greedy construction met a tail-first edge after its head");
      }
    }
    if (traverse) {
      x = y;
    }
    e = r.next(x, e);
    if (seen[e][side(x, e)]) break;
  }
  if (std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; })) {
    return tree_from_mask(g, fg.orient, in_tree, fg.id);
  }
  Cut c{std::vector<char>(g.num_vertices(), 1)};
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (reached[v]) c.side[v] = 0;
  }
  return c;
}

}  // namespace detail

/// Tour-driven tree: head-first edges are taken, tail-first edges skipped.
/// Returns the cut around the reached set when the tree does not span.
inline GreedyResult greedy_tree(const Graph& g, const FacetGraph& fg, const Ribbon& r,
                                const Basis& b) {
  return detail::grow_greedy(g, fg, r, b, std::nullopt);
}

/// Greedy tree that also takes `uv` when it is first met at its tail.
inline GreedyResult almost_greedy_tree(const Graph& g, const FacetGraph& fg, const Ribbon& r,
                                       const Basis& b, const DirectedEdge& uv) {
  if (uv.edge < 0 || uv.edge >= g.num_edges() || fg.orient[uv.edge] == 0) {
    throw std::invalid_argument("forced edge is hidden in the facet");
  }
  if (directed_in(g, fg.orient, uv.edge) != uv) {
    throw std::invalid_argument("forced edge is oriented against the facet");
  }
  return detail::grow_greedy(g, fg, r, b, uv);
}

namespace detail {

// Vertices from which `target` is reachable along present directed edges.
inline std::vector<char> reaching(const Graph& g, const Orientation& o, Vertex target) {
  std::vector<char> in(g.num_vertices(), 0);
  std::vector<Vertex> stack{target};
  in[target] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      if (o[e] == 0 || head_of(g, o, e) != v) continue;
      Vertex u = tail_of(g, o, e);
      if (!in[u]) {
        in[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return in;
}

}  // namespace detail

struct StickTree {
  FacetGraph facet;
  JaegerTree tree;
};

/// The Jaeger tree (over all facets) whose only tail-edge is `e`, if any.
inline std::optional<StickTree> stick_tree(const Context& ctx, const DirectedEdge& e) {
  const Graph& g = ctx.graph;
  if (e.edge < 0 || e.edge >= g.num_edges()) throw std::invalid_argument("edge out of range");
  sign_of(g, e);
  const Vertex b0 = ctx.basis.node;
  FacetGraph g1 = first_facet_graph(g, b0);
  g1.id = ctx.find_facet(g1.layering);
  auto t1 = greedy_tree(g, g1, ctx.ribbon, ctx.basis);
  if (!std::holds_alternative<SpanningTree>(t1)) {
    throw IntegrityError("greedy tree of the first facet does not span");
  }
  const auto& tree1 = std::get<SpanningTree>(t1);

  FacetGraph host;
  if (g1.orient[e.edge] != 0 && directed_in(g, g1.orient, e.edge) == e) {
    if (tree1.contains(e.edge)) return std::nullopt;
    host = g1;
  } else {
    Layering l = g1.layering;
    const Vertex x = e.head;
    auto sd = detail::reaching(g, g1.orient, x);
    if (g1.orient[e.edge] != 0) {
      // present in the first facet with the opposite orientation
      std::vector<char> sh(g.num_vertices(), 0);
      for (EdgeId f = 0; f < g.num_edges(); ++f) {
        if (g1.orient[f] != 0) continue;
        auto [a, c] = g.endpoints(f);
        if (sd[a] && !sd[c]) sh[c] = 1;
        if (sd[c] && !sd[a]) sh[a] = 1;
      }
      // close under reaching
      std::vector<Vertex> stack;
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (sh[v]) stack.push_back(v);
      }
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (EdgeId f : g.incident(v)) {
          if (g1.orient[f] == 0 || head_of(g, g1.orient, f) != v) continue;
          Vertex u = tail_of(g, g1.orient, f);
          if (!sh[u] && !sd[u]) {
            sh[u] = 1;
            stack.push_back(u);
          }
        }
      }
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (sd[v]) l[v] += 2;
        else if (sh[v]) l[v] += 1;
      }
    } else {
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (sd[v]) l[v] += 1;
      }
    }
    try {
      host = facet_from_layering(g, std::move(l), b0);
    } catch (const std::invalid_argument&) {
      throw IntegrityError("shifted layering for a stick tree is not a facet");
    }
    host.id = ctx.find_facet(host.layering);
    if (host.id < 0) throw IntegrityError("shifted layering is missing from the facet list");
  }
  auto res = almost_greedy_tree(g, host, ctx.ribbon, ctx.basis, e);
  if (!std::holds_alternative<SpanningTree>(res)) {
    throw IntegrityError("almost greedy tree for a stick edge does not span");
  }
  auto jt = make_jaeger_tree(g, host, ctx.ribbon, ctx.basis, std::get<SpanningTree>(res));
  if (!is_jaeger_tree(g, host, ctx.ribbon, ctx.basis, jt.tree).is_jaeger ||
      jt.tail_edges != std::vector<EdgeId>{e.edge}) {
    throw IntegrityError("constructed stick tree is not a Jaeger tree with the single tail-edge");
  }
  return StickTree{std::move(host), std::move(jt)};
}

namespace detail {

inline void check_same_context(const JaegerTree& a, const JaegerTree& x, const Context& ctx) {
  int m = static_cast<int>(ctx.facets.size());
  if (a.facet < 1 || a.facet > m || x.facet < 1 || x.facet > m) {
    throw std::invalid_argument("tree facet id does not belong to this context");
  }
}

inline std::strong_ordering check_equal(const JaegerTree& a, const JaegerTree& x) {
  if (!(a == x)) throw IntegrityError("distinct trees produced identical tours");
  return std::strong_ordering::equal;
}

}  // namespace detail

/// Facet order first (decreasing weight, i.e. increasing id); within a
/// facet, at the first tour difference the tree skipping the edge is smaller.
inline std::strong_ordering compare_face_by_face(const Context& ctx, const JaegerTree& a,
                                                 const JaegerTree& x) {
  detail::check_same_context(a, x, ctx);
  if (a.facet != x.facet) return a.facet <=> x.facet;
  const auto& fg = ctx.facet(a.facet);
  auto ma = tree_mask(ctx.graph, a.tree), mx = tree_mask(ctx.graph, x.tree);
  TourWalker wa(ctx.graph, fg.orient, ctx.ribbon, ctx.basis, ma);
  TourWalker wx(ctx.graph, fg.orient, ctx.ribbon, ctx.basis, mx);
  for (; !wa.done() && !wx.done(); wa.advance(), wx.advance()) {
    auto sa = wa.current(), sx = wx.current();
    if (sa.kind == sx.kind) continue;
    return sa.kind == StepKind::skip ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return detail::check_equal(a, x);
}

namespace detail {

// Rank of the status of the current pair (u, e) in the quadratic order.
inline int quadratic_rank(const Graph& g, const Orientation& o, const std::vector<char>& mask,
                          Vertex u, EdgeId e) {
  if (o[e] == 0) return 2;
  bool at_tail = tail_of(g, o, e) == u;
  if (mask[e]) return at_tail ? 4 : 1;
  if (at_tail) return 3;
  return 0;  // non-tree edge reached at its head
}

}  // namespace detail

/// Quadratic order: compare tours in the full graph; at the first differing
/// pair rank head-first tree edge < hidden < skipped tail-first < tail-edge.
inline std::strong_ordering compare_quadratic(const Context& ctx, const JaegerTree& a,
                                              const JaegerTree& x) {
  detail::check_same_context(a, x, ctx);
  const auto& fa = ctx.facet(a.facet);
  const auto& fx = ctx.facet(x.facet);
  auto ma = tree_mask(ctx.graph, a.tree), mx = tree_mask(ctx.graph, x.tree);
  TourWalker wa(ctx.graph, fa.orient, ctx.ribbon, ctx.basis, ma);
  TourWalker wx(ctx.graph, fx.orient, ctx.ribbon, ctx.basis, mx);
  for (; !wa.done() && !wx.done(); wa.advance(), wx.advance()) {
    auto sa = wa.current(), sx = wx.current();
    if (sa.node != sx.node || sa.edge != sx.edge) {
      throw IntegrityError("tours diverged without a differing status");
    }
    int ra = detail::quadratic_rank(ctx.graph, fa.orient, ma, sa.node, sa.edge);
    int rx = detail::quadratic_rank(ctx.graph, fx.orient, mx, sx.node, sx.edge);
    if (ra == rx) continue;
    if (ra == 0 || rx == 0) throw IntegrityError("non-tree edge reached at its head first");
    return ra <=> rx;
  }
  if (wa.done() != wx.done()) throw IntegrityError("tours of different length agree pairwise");
  return detail::check_equal(a, x);
}

enum class OrderKind : std::uint8_t { face_by_face, quadratic };

inline std::strong_ordering compare(const Context& ctx, OrderKind k, const JaegerTree& a,
                                    const JaegerTree& x) {
  return k == OrderKind::face_by_face ? compare_face_by_face(ctx, a, x)
                                      : compare_quadratic(ctx, a, x);
}

inline void sort_trees(const Context& ctx, OrderKind k, std::vector<JaegerTree>& trees) {
  std::sort(trees.begin(), trees.end(), [&](const JaegerTree& a, const JaegerTree& x) {
    return compare(ctx, k, a, x) < 0;
  });
}

}  // namespace sepoly
