#include <gtest/gtest.h>

#include "sepoly/sepoly.hpp"
#include "support/fixtures.hpp"

using namespace sepoly;

TEST(IntPolynomial, Basics) {
  IntPolynomial p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(IntPolynomial{}.degree(), -1);
  EXPECT_EQ(IntPolynomial({0, 0}).degree(), -1);
  EXPECT_EQ(IntPolynomial::one_plus_x_pow(3), (IntPolynomial{1, 3, 3, 1}));
  EXPECT_EQ((IntPolynomial{1, 2} * IntPolynomial{1, 2}), (IntPolynomial{1, 4, 4}));
  EXPECT_EQ(IntPolynomial({1, 5, 5, 1}).eval(1), 12);
  EXPECT_TRUE(IntPolynomial({1, 5, 5, 1}).is_palindromic());
  EXPECT_FALSE(IntPolynomial({1, 5, 4, 1}).is_palindromic());
  EXPECT_EQ(IntPolynomial({1, 2, 6}).to_string(), "[1, 2, 6]");
}

TEST(HStar, FromHistogram) {
  std::vector<std::uint64_t> k2{1, 1}, p3{1, 2, 1}, c4{1, 5, 5, 1};
  EXPECT_EQ(hstar_from_histogram(k2, 2), (IntPolynomial{1, 1}));
  EXPECT_EQ(hstar_from_histogram(p3, 3), (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(hstar_from_histogram(c4, 4), (IntPolynomial{1, 5, 5, 1}));
  std::vector<std::uint64_t> bad{2, 1};
  EXPECT_THROW(hstar_from_histogram(bad, 2), IntegrityError);
}

TEST(HStar, FromLatticeCounts) {
  std::vector<long long> k2{1, 3}, point{1, 1, 1};
  EXPECT_EQ(hstar_from_lattice_counts(std::span<const long long>(k2), 1), (IntPolynomial{1, 1}));
  EXPECT_EQ(hstar_from_lattice_counts(std::span<const long long>(point), 0), (IntPolynomial{1}));
  // K2 with one extra count: residual vanishes
  std::vector<long long> k2x{1, 3, 5};
  EXPECT_EQ(hstar_from_lattice_counts(std::span<const long long>(k2x), 1), (IntPolynomial{1, 1}));
  std::vector<long long> off{1, 3, 6};
  EXPECT_THROW(hstar_from_lattice_counts(std::span<const long long>(off), 1), InconsistencyError);
  std::vector<long long> short_counts{1};
  EXPECT_THROW(hstar_from_lattice_counts(std::span<const long long>(short_counts), 1),
               std::invalid_argument);
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gamma_transform({1, 5, 5, 1}), (IntPolynomial{1, 2}));
  EXPECT_EQ(gamma_transform(IntPolynomial::one_plus_x_pow(5)), (IntPolynomial{1}));
  EXPECT_EQ(gamma_transform({1, 6, 16, 6, 1}), (IntPolynomial{1, 2, 6}));
  EXPECT_THROW(gamma_transform({1, 2, 3}), DomainError);
}

TEST(Gamma, RoundTrip) {
  for (IntPolynomial p : {IntPolynomial{1, 5, 5, 1}, IntPolynomial{1, 12, 51, 80, 51, 12, 1},
                          IntPolynomial{1, 9, 9, 1}, IntPolynomial{1, 6, 16, 6, 1},
                          IntPolynomial{1, 1, 1}}) {
    EXPECT_EQ(gamma_expand(gamma_transform(p), p.degree()), p);
  }
  EXPECT_EQ(gamma_transform({1, 1, 1}), (IntPolynomial{1, -1}));
}

TEST(Cycles, ClosedForms) {
  EXPECT_EQ(cycle_gamma(3), (IntPolynomial{1, 2}));
  EXPECT_EQ(cycle_gamma(4), (IntPolynomial{1, 2}));
  EXPECT_EQ(cycle_gamma(5), (IntPolynomial{1, 2, 6}));
  EXPECT_THROW(cycle_gamma(2), std::invalid_argument);
  EXPECT_EQ(cycle_hstar_coefficient(5, 1), 6);
  EXPECT_EQ(cycle_hstar_coefficient(4, 0), 1);
  EXPECT_EQ(cycle_hstar_coefficient(4, 1), 5);
  EXPECT_EQ(cycle_hstar_coefficient(4, 2), 5);
  EXPECT_EQ(cycle_hstar_coefficient(5, 2), 16);
}

TEST(Cycles, PipelineMatchesClosedForms) {
  for (int n = 3; n <= 7; ++n) {
    auto rep = hstar_report(make_context(fixtures::cycle(n)));
    for (int i = 0; i < n; ++i) EXPECT_EQ(rep.hstar[i], cycle_hstar_coefficient(n, i));
    EXPECT_EQ(rep.gamma, cycle_gamma(n));
  }
}

TEST(BinomialIdentity, Examples) {
  auto [l, r] = binom_identity_check(4, 0, 2);
  EXPECT_EQ(l, 16);
  EXPECT_EQ(r, 16);
  auto [l2, r2] = binom_identity_check(5, 1, 2);
  EXPECT_EQ(l2, r2);
  EXPECT_THROW(binom_identity_check(3, 0, 2), std::invalid_argument);
  EXPECT_THROW(binom_identity_check(5, -1, 1), std::invalid_argument);
}

TEST(Pipeline, SmallGraphs) {
  auto k4 = hstar_report(make_context(fixtures::complete(4)));
  EXPECT_EQ(k4.hstar, (IntPolynomial{1, 9, 9, 1}));
  EXPECT_EQ(k4.gamma, (IntPolynomial{1, 6}));
  auto p3 = hstar_report(make_context(fixtures::path(3)));
  EXPECT_EQ(p3.hstar, (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(p3.gamma, (IntPolynomial{1}));
  auto c4 = hstar_report(make_context(fixtures::cycle(4)));
  EXPECT_EQ(c4.volume, 12);
}

TEST(Interior, Examples) {
  auto c4 = fixtures::cycle(4);
  auto r = Ribbon::by_neighbor_id(c4);
  auto b = default_basis(c4, r);
  EXPECT_EQ(interior_of_bipartite(c4, r, b), (IntPolynomial{1, 1}));
  auto p = fixtures::star(3);
  auto rp = Ribbon::by_neighbor_id(p);
  EXPECT_EQ(interior_of_bipartite(p, rp, default_basis(p, rp)), (IntPolynomial{1}));
  auto k3 = fixtures::complete(3);
  auto r3 = Ribbon::by_neighbor_id(k3);
  EXPECT_THROW(interior_of_bipartite(k3, r3, default_basis(k3, r3)), DomainError);
}

TEST(Interior, ConstantTermOneForEveryFacet) {
  for (auto g : {fixtures::cycle(5), fixtures::complete(4), fixtures::complete_bipartite(2, 3)}) {
    auto ctx = make_context(g);
    for (const auto& fg : ctx.facets) {
      EXPECT_EQ(interior_polynomial(g, fg, ctx.ribbon, ctx.basis)[0], 1);
    }
  }
}

TEST(Interior, EvaluatesToStandardJaegerCount) {
  auto g = fixtures::complete_bipartite(2, 3);
  auto ctx = make_context(g);
  auto colour = *bipartition(g);
  auto fg = facet_from_layering(g, colour, ctx.basis.node);
  EXPECT_EQ(interior_of_bipartite(g, ctx.ribbon, ctx.basis).eval(1),
            enumerate_jaeger_trees(g, fg, ctx.ribbon, ctx.basis).size());
}

TEST(Glue, Products) {
  LabeledEdges c4a{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  LabeledEdges c4b{{0, 1}, {1, 4}, {4, 5}, {5, 0}};
  auto edge = glue_product_check(c4a, c4b);
  EXPECT_EQ(edge.kind, GlueKind::edge);
  EXPECT_EQ(edge.gamma_union, (IntPolynomial{1, 4, 4}));
  EXPECT_TRUE(edge.gamma_ok);
  EXPECT_TRUE(edge.interior_ok);

  auto vtx = glue_product_check(c4a, LabeledEdges{{2, 7}});
  EXPECT_EQ(vtx.kind, GlueKind::vertex);
  EXPECT_EQ(vtx.gamma_union, (IntPolynomial{1, 2}));
  EXPECT_TRUE(vtx.gamma_ok && vtx.interior_ok);

  auto trees = glue_product_check(LabeledEdges{{0, 1}, {1, 2}}, LabeledEdges{{2, 3}});
  EXPECT_EQ(trees.gamma_union, (IntPolynomial{1}));

  EXPECT_THROW(glue_product_check(c4a, LabeledEdges{{8, 9}}), std::invalid_argument);
  EXPECT_THROW(glue_product_check(c4a, LabeledEdges{{0, 2}, {2, 9}, {9, 0}}), std::invalid_argument);
}
