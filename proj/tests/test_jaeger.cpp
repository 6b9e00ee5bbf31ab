#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sepoly/sepoly.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace sepoly;

namespace {

SpanningTree tree_of(const Graph& g, std::vector<std::pair<Vertex, Vertex>> directed) {
  std::vector<DirectedEdge> d;
  for (auto [t, h] : directed) d.push_back(make_directed(g, *g.edge_between(t, h), t));
  return make_tree(d);
}

std::set<oracle::BruteTree> as_brute(const std::vector<JaegerTree>& ts) {
  std::set<oracle::BruteTree> out;
  for (const auto& t : ts) {
    oracle::BruteTree b;
    for (const auto& d : t.tree.edges) b.edges.push_back(d.edge);
    std::sort(b.edges.begin(), b.edges.end());
    b.tail_edges = t.tail_edges;
    out.insert(std::move(b));
  }
  return out;
}

std::vector<Context> small_contexts() {
  std::vector<Context> out;
  for (auto g : {Graph(2, {{0, 1}}), fixtures::path(4), fixtures::cycle(4), fixtures::cycle(5),
                 fixtures::complete(4), fixtures::complete_bipartite(2, 3)}) {
    out.push_back(make_context(g));
  }
  auto d = fixtures::drawn_diamond();
  out.push_back(make_context(d.graph, d.ribbon, d.basis));
  return out;
}

}  // namespace

TEST(JaegerCheck, DrawnTrees) {
  auto f = fixtures::drawn_bipartite();
  auto host = facet_from_layering(f.graph, {0, 0, 0, 1, 1, 1, 1}, 0);
  auto left = tree_of(f.graph, {{0, 3}, {0, 5}, {1, 3}, {2, 4}, {1, 6}, {2, 5}});
  auto bad = is_jaeger_tree(f.graph, host, f.ribbon, f.basis, left);
  EXPECT_FALSE(bad.is_jaeger);
  ASSERT_TRUE(bad.violation.has_value());
  EXPECT_EQ(bad.violation->node, 6);
  EXPECT_EQ(bad.violation->edge, *f.graph.edge_between(6, 2));

  auto right = tree_of(f.graph, {{0, 5}, {1, 3}, {1, 6}, {2, 4}, {2, 5}, {2, 6}});
  EXPECT_TRUE(is_jaeger_tree(f.graph, host, f.ribbon, f.basis, right).is_jaeger);
  auto jt = make_jaeger_tree(f.graph, host, f.ribbon, f.basis, right);
  std::vector<EdgeId> expect{*f.graph.edge_between(0, 5), *f.graph.edge_between(1, 3),
                             *f.graph.edge_between(2, 4), *f.graph.edge_between(2, 6)};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(jt.tail_edges, expect);
}

TEST(JaegerCheck, SingleEdgeFacets) {
  Graph g(2, {{0, 1}});
  auto r = Ribbon::by_neighbor_id(g);
  for (int dir : {1, -1}) {
    auto fg = facet_from_layering(g, {0, dir}, 0);
    auto ts = enumerate_jaeger_trees(g, fg, r, Basis{0, 0});
    ASSERT_EQ(ts.size(), 1u);
    EXPECT_EQ(ts[0].tail_count, dir == 1 ? 1 : 0);
  }
}

TEST(Enumeration, MatchesBruteForce) {
  std::vector<Graph> graphs{fixtures::cycle(4), fixtures::cycle(5), fixtures::complete(4),
                            fixtures::complete_bipartite(2, 3), fixtures::star(3),
                            fixtures::drawn_diamond().graph, fixtures::cycle(6)};
  std::mt19937_64 rng(21);
  for (int i = 0; i < 6; ++i) graphs.push_back(oracle::random_connected(6, 0.5, rng));
  for (const auto& g : graphs) {
    auto r = oracle::random_ribbon(g, rng);
    for (Vertex b0 : {0, 1}) {
      Basis b{b0, g.incident(b0)[0]};
      for (const auto& fg : enumerate_facet_graphs(g, b0)) {
        auto ours = enumerate_jaeger_trees(g, fg, r, b);
        auto brute = oracle::jaeger_trees(g, r, fg.layering, b0, b.edge);
        EXPECT_EQ(as_brute(ours), brute);
        EXPECT_EQ(ours.size(), brute.size());
        for (const auto& t : ours) {
          EXPECT_TRUE(is_jaeger_tree(g, fg, r, b, t.tree).is_jaeger);
          EXPECT_EQ(tail_edges_by_tour(g, fg, r, b, t.tree), t.tail_edges);
        }
      }
    }
  }
}

TEST(Enumeration, DrawnBipartiteCounts) {
  auto f = fixtures::drawn_bipartite();
  auto ctx = make_context(f.graph, f.ribbon, f.basis);
  auto all = enumerate_all_jaeger(ctx);
  EXPECT_EQ(all.histogram, (TailHistogram{1, 12, 51, 80, 51, 12, 1}));
  EXPECT_EQ(all.trees.size(), 208u);
}

TEST(Enumeration, EmittedInTourOrderWithinFacet) {
  for (const auto& ctx : small_contexts()) {
    for (const auto& fg : ctx.facets) {
      auto ts = enumerate_jaeger_trees(ctx.graph, fg, ctx.ribbon, ctx.basis);
      for (std::size_t i = 1; i < ts.size(); ++i) {
        EXPECT_TRUE(compare_face_by_face(ctx, ts[i - 1], ts[i]) < 0);
      }
    }
  }
}

TEST(Greedy, FirstFacetGreedyTreeIsTheMinimum) {
  for (const auto& ctx : small_contexts()) {
    const auto& g1 = ctx.facets.front();
    auto res = greedy_tree(ctx.graph, g1, ctx.ribbon, ctx.basis);
    ASSERT_TRUE(std::holds_alternative<SpanningTree>(res));
    auto t1 = make_jaeger_tree(ctx.graph, g1, ctx.ribbon, ctx.basis, std::get<SpanningTree>(res));
    EXPECT_EQ(t1.tail_count, 0);
    auto all = enumerate_all_jaeger(ctx).trees;
    for (OrderKind k : {OrderKind::face_by_face, OrderKind::quadratic}) {
      for (const auto& t : all) {
        if (!(t == t1)) EXPECT_TRUE(compare(ctx, k, t1, t) < 0);
      }
    }
  }
}

TEST(Greedy, BlockedSingleEdge) {
  Graph g(2, {{0, 1}});
  auto fg = facet_from_layering(g, {0, 1}, 0);
  auto res = greedy_tree(g, fg, Ribbon::by_neighbor_id(g), Basis{0, 0});
  ASSERT_TRUE(std::holds_alternative<Cut>(res));
  EXPECT_EQ(std::get<Cut>(res).side, (std::vector<char>{0, 1}));
}

TEST(Greedy, DrawnGreedyAndAlmostGreedy) {
  auto f = fixtures::drawn_greedy();
  auto ctx = make_context(f.graph, f.ribbon, f.basis);
  auto st = stick_tree(ctx, make_directed(f.graph, *f.graph.edge_between(0, 1), 0));
  ASSERT_TRUE(st.has_value());
  EXPECT_EQ(st->facet.layering, (Layering{0, 1, -1, -1, 0, -1, -2, -2}));
  auto expect = tree_of(f.graph, {{0, 1}, {2, 0}, {3, 0}, {6, 3}, {4, 1}, {7, 5}, {5, 4}});
  EXPECT_EQ(st->tree.tree.edges, expect.edges);
}

TEST(Greedy, AlmostGreedyRejectsHiddenOrReversedEdge) {
  auto g = fixtures::cycle(3);
  auto fg = facet_from_layering(g, {0, 1, 1}, 0);
  auto r = Ribbon::by_neighbor_id(g);
  EdgeId flat = *g.edge_between(1, 2);
  EXPECT_THROW(almost_greedy_tree(g, fg, r, Basis{0, 0}, make_directed(g, flat, 1)),
               std::invalid_argument);
  EdgeId e01 = *g.edge_between(0, 1);
  EXPECT_THROW(almost_greedy_tree(g, fg, r, Basis{0, 0}, make_directed(g, e01, 1)),
               std::invalid_argument);
}

TEST(StickTrees, CountUniquenessAndUnion) {
  std::vector<Context> ctxs = small_contexts();
  auto f2 = fixtures::drawn_bipartite();
  ctxs.push_back(make_context(f2.graph, f2.ribbon, f2.basis));
  auto f4 = fixtures::drawn_greedy();
  ctxs.push_back(make_context(f4.graph, f4.ribbon, f4.basis));
  for (const auto& ctx : ctxs) {
    const Graph& g = ctx.graph;
    std::vector<JaegerTree> found;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      auto [a, b] = g.endpoints(e);
      for (Vertex t : {a, b}) {
        auto st = stick_tree(ctx, make_directed(g, e, t));
        if (st) found.push_back(st->tree);
      }
    }
    EXPECT_EQ(static_cast<int>(found.size()), 2 * g.num_edges() - g.num_vertices() + 1);
    std::vector<JaegerTree> ones;
    for (const auto& t : enumerate_all_jaeger(ctx).trees) {
      if (t.tail_count == 1) ones.push_back(t);
    }
    EXPECT_EQ(found.size(), ones.size());
    for (const auto& t : found) {
      EXPECT_EQ(std::count(found.begin(), found.end(), t), 1);
      EXPECT_EQ(std::count(ones.begin(), ones.end(), t), 1);
    }
  }
}

TEST(StickTrees, EdgeOfFirstGreedyTreeHasNone) {
  auto ctx = make_context(fixtures::cycle(4));
  auto res = greedy_tree(ctx.graph, ctx.facets.front(), ctx.ribbon, ctx.basis);
  for (const auto& d : std::get<SpanningTree>(res).edges) {
    EXPECT_FALSE(stick_tree(ctx, d).has_value());
  }
}

TEST(Orders, TotalOnAllTrees) {
  for (const auto& ctx : small_contexts()) {
    auto all = enumerate_all_jaeger(ctx).trees;
    for (OrderKind k : {OrderKind::face_by_face, OrderKind::quadratic}) {
      auto sorted = all;
      sort_trees(ctx, k, sorted);
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        EXPECT_TRUE(compare(ctx, k, sorted[i], sorted[i]) == 0);
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
          EXPECT_TRUE(compare(ctx, k, sorted[i], sorted[j]) < 0);
          EXPECT_TRUE(compare(ctx, k, sorted[j], sorted[i]) > 0);
        }
      }
    }
  }
}

TEST(Orders, FaceByFaceFollowsFacetIds) {
  auto ctx = make_context(fixtures::cycle(5));
  auto all = enumerate_all_jaeger(ctx).trees;
  for (const auto& a : all) {
    for (const auto& x : all) {
      if (a.facet < x.facet) EXPECT_TRUE(compare_face_by_face(ctx, a, x) < 0);
    }
  }
}

TEST(Orders, QuadraticAgreesWithinFacet) {
  for (const auto& ctx : small_contexts()) {
    auto all = enumerate_all_jaeger(ctx).trees;
    for (const auto& a : all) {
      for (const auto& x : all) {
        if (a.facet != x.facet) continue;
        EXPECT_TRUE(compare_quadratic(ctx, a, x) == compare_face_by_face(ctx, a, x));
      }
    }
  }
}

// The first tour step is (b0, b0b1) for every tree; its role there decides
// the quadratic order: head-edge, hidden, tail-first non-tree, tail-edge.
TEST(Orders, QuadraticRanksTheBaseEdgeRole) {
  auto d = fixtures::drawn_diamond();
  auto ctx = make_context(d.graph, d.ribbon, d.basis);
  const EdgeId base = d.basis.edge;
  auto role = [&](const JaegerTree& t) {
    const auto& fg = ctx.facet(t.facet);
    if (fg.orient[base] == 0) return 2;
    bool in = t.tree.contains(base);
    bool tail_at_b0 = tail_of(ctx.graph, fg.orient, base) == d.basis.node;
    if (in) return tail_at_b0 ? 4 : 1;
    return 3;
  };
  auto all = enumerate_all_jaeger(ctx).trees;
  std::set<int> roles;
  for (const auto& t : all) roles.insert(role(t));
  EXPECT_EQ(roles, (std::set<int>{1, 2, 3, 4}));
  for (const auto& a : all) {
    for (const auto& x : all) {
      if (role(a) < role(x)) EXPECT_TRUE(compare_quadratic(ctx, a, x) < 0);
    }
  }
}

TEST(Orders, RejectMixedContexts) {
  auto ctx = make_context(fixtures::cycle(4));
  JaegerTree bogus;
  bogus.facet = 99;
  auto t = enumerate_all_jaeger(ctx).trees.front();
  EXPECT_THROW(compare_quadratic(ctx, t, bogus), std::invalid_argument);
}

TEST(Counts, InvariantUnderRibbonAndBasis) {
  std::mt19937_64 rng(8);
  for (auto g : {fixtures::cycle(5), fixtures::complete(4), fixtures::complete_bipartite(2, 3)}) {
    auto base = hstar_report(make_context(g)).hstar;
    for (int i = 0; i < 4; ++i) {
      auto r = oracle::random_ribbon(g, rng);
      std::uniform_int_distribution<Vertex> pick(0, g.num_vertices() - 1);
      Vertex v = pick(rng);
      Basis b{v, g.incident(v)[0]};
      EXPECT_EQ(hstar_report(make_context(g, r, b)).hstar, base);
    }
  }
}

TEST(Shelling, ReportsAndGeometry) {
  for (const auto& ctx : small_contexts()) {
    auto all = enumerate_all_jaeger(ctx);
    for (OrderKind k : {OrderKind::face_by_face, OrderKind::quadratic}) {
      auto sorted = all.trees;
      sort_trees(ctx, k, sorted);
      auto rep = shelling_report(ctx, sorted, k, ctx.graph.num_vertices() <= 5);
      EXPECT_TRUE(rep.geometric_ok) << rep.failure;
      EXPECT_EQ(rep.histogram, all.histogram);
      EXPECT_EQ(rep.entries.front().r, 0);
      EXPECT_EQ(rep.entries.back().r, ctx.graph.num_vertices() - 1);
      for (const auto& e : rep.entries) {
        if (e.attached) EXPECT_EQ(*e.attached, e.r);
      }
    }
  }
}

TEST(Shelling, RejectsUnsortedInput) {
  auto ctx = make_context(fixtures::cycle(4));
  auto ts = enumerate_all_jaeger(ctx).trees;
  sort_trees(ctx, OrderKind::quadratic, ts);
  std::reverse(ts.begin(), ts.end());
  EXPECT_THROW(shelling_report(ctx, ts, OrderKind::quadratic, false), std::invalid_argument);
}
