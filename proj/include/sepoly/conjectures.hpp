#pragma once
/**
 * Experiment harness on random bipartite graphs: computes gamma and
 * interior polynomials and evaluates three predicates relating them.
 *
 *   degree:   deg I_G == deg gamma_G
 *   collision: within the batch, equal gamma implies equal I_G
 *   minimal:  the standard orientation has a coefficientwise minimal
 *             interior polynomial among all facets
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepoly/context.hpp"
#include "sepoly/interior.hpp"
#include "sepoly/jaeger.hpp"
#include "sepoly/poly.hpp"

namespace sepoly {

struct BipartiteModel {
  int min_side = 2;  // partite class sizes drawn uniformly from [min_side, max_side]
  int max_side = 4;
  double edge_probability = 0.5;
};

struct RandomBipartite {
  int side_u = 0;
  int side_w = 0;
  LabeledEdges edges;  // u in [0, side_u), w in [side_u, side_u + side_w)
};

/// Rejection sampler for connected random bipartite graphs.
inline RandomBipartite random_connected_bipartite(std::mt19937_64& rng, const BipartiteModel& m) {
  if (m.min_side < 1 || m.max_side < m.min_side) throw std::invalid_argument("bad side range");
  std::uniform_int_distribution<int> side(m.min_side, m.max_side);
  std::bernoulli_distribution coin(m.edge_probability);
  while (true) {
    RandomBipartite out{side(rng), side(rng), {}};
    for (int u = 0; u < out.side_u; ++u) {
      for (int w = 0; w < out.side_w; ++w) {
        if (coin(rng)) out.edges.emplace_back(u, out.side_u + w);
      }
    }
    const int n = out.side_u + out.side_w;
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [a, b] : out.edges) parent[find(a)] = find(b);
    bool connected = true;
    for (int v = 1; v < n; ++v) connected = connected && find(v) == find(0);
    if (connected) return out;
  }
}

struct ConjectureRecord {
  int id = 0;
  RandomBipartite graph;
  IntPolynomial gamma;
  IntPolynomial interior;
  bool degree_ok = false;
  bool collision_ok = true;  // filled in across the batch
  bool minimal_ok = false;
};

/// Per-facet interior polynomials and the h* histogram.
struct FacetSurvey {
  TailHistogram histogram;
  std::vector<IntPolynomial> interior;  // index = facet id - 1
};

inline FacetSurvey survey_facets(const Context& ctx) {
  FacetSurvey s;
  s.histogram.assign(static_cast<std::size_t>(ctx.graph.num_vertices()), 0);
  for (const auto& fg : ctx.facets) {
    s.interior.push_back(interior_polynomial(ctx.graph, fg, ctx.ribbon, ctx.basis));
  }
  auto [h, per] = tail_histogram(ctx);
  s.histogram = std::move(h);
  return s;
}

inline bool coefficientwise_leq(const IntPolynomial& a, const IntPolynomial& b) {
  int d = std::max(a.degree(), b.degree());
  for (int i = 0; i <= d; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline ConjectureRecord evaluate_graph(int id, const RandomBipartite& rb) {
  ConjectureRecord rec;
  rec.id = id;
  rec.graph = rb;
  auto ctx = make_context(graph_from_labels(rb.edges));
  auto survey = survey_facets(ctx);
  rec.gamma = gamma_transform(hstar_from_histogram(survey.histogram, ctx.graph.num_vertices()));
  rec.interior = interior_of_bipartite(ctx.graph, ctx.ribbon, ctx.basis);
  rec.degree_ok = rec.gamma.degree() == rec.interior.degree();
  rec.minimal_ok = true;
  for (const auto& p : survey.interior) {
    if (!coefficientwise_leq(rec.interior, p)) rec.minimal_ok = false;
  }
  return rec;
}

struct ConjectureBatch {
  std::vector<ConjectureRecord> records;
  int degree_violations = 0;
  int collision_violations = 0;
  int minimal_violations = 0;
};

/// Marks records whose gamma is shared with a record of different I_G.
inline void fill_collisions(ConjectureBatch& b) {
  std::map<std::string, std::set<std::string>> table;
  for (const auto& r : b.records) table[r.gamma.to_string()].insert(r.interior.to_string());
  b.collision_violations = 0;
  for (auto& r : b.records) {
    r.collision_ok = table[r.gamma.to_string()].size() == 1;
    if (!r.collision_ok) ++b.collision_violations;
  }
}

inline ConjectureBatch run_conjectures(int count, const BipartiteModel& model, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ConjectureBatch b;
  for (int i = 0; i < count; ++i) {
    auto rec = evaluate_graph(i, random_connected_bipartite(rng, model));
    if (!rec.degree_ok) ++b.degree_violations;
    if (!rec.minimal_ok) ++b.minimal_violations;
    b.records.push_back(std::move(rec));
  }
  fill_collisions(b);
  return b;
}

inline constexpr const char* kConjectureCsvHeader =
    "id,side_u,side_w,edges,gamma,interior,deg_gamma,deg_interior,degree_ok,collision_ok,"
    "minimal_ok";

inline std::string poly_field(const IntPolynomial& p) {
  std::string s;
  for (const auto& c : p.coefficients()) {
    if (!s.empty()) s += ' ';
    s += c.str();
  }
  return s;
}

inline void write_conjecture_csv(std::ostream& out, const ConjectureBatch& b,
                                 const BipartiteModel& model, std::uint64_t seed) {
  out << "# sepoly conjecture csv v1\n";
  out << "# model: sides " << model.min_side << ".." << model.max_side << ", edge probability "
      << model.edge_probability << ", seed " << seed << "\n";
  out << kConjectureCsvHeader << "\n";
  for (const auto& r : b.records) {
    std::string edges;
    for (auto [u, w] : r.graph.edges) {
      if (!edges.empty()) edges += ';';
      edges += std::to_string(u) + "-" + std::to_string(w);
    }
    out << r.id << ',' << r.graph.side_u << ',' << r.graph.side_w << ',' << edges << ','
        << poly_field(r.gamma) << ',' << poly_field(r.interior) << ',' << r.gamma.degree() << ','
        << r.interior.degree() << ',' << r.degree_ok << ',' << r.collision_ok << ','
        << r.minimal_ok << "\n";
  }
  out << "# summary: graphs " << b.records.size() << ", degree violations "
      << b.degree_violations << ", collision violations " << b.collision_violations
      << ", minimality violations " << b.minimal_violations << "\n";
}

}  // namespace sepoly
