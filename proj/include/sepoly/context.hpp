#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sepoly/facets.hpp"
#include "sepoly/graph.hpp"

namespace sepoly {

/// Everything the Jaeger machinery is relative to: the graph, one global
/// ribbon structure, a basis, and the facets ordered by a generic weight.
struct Context {
  Graph graph;
  Ribbon ribbon;
  Basis basis;
  WeightFunction weight;
  std::vector<FacetGraph> facets;  // decreasing facet value, ids 1..M

  const FacetGraph& facet(int id) const { return facets.at(static_cast<std::size_t>(id - 1)); }

  /// Id of the facet with the given layering (normalised at b0), or -1.
  int find_facet(const Layering& l) const {
    for (const auto& fg : facets) {
      if (fg.layering == l) return fg.id;
    }
    return -1;
  }
};

inline Context make_context(Graph g, std::optional<Ribbon> ribbon = std::nullopt,
                            std::optional<Basis> basis = std::nullopt, std::uint64_t seed = 1) {
  if (g.num_edges() == 0) throw std::invalid_argument("graph needs at least one edge");
  Context ctx;
  ctx.ribbon = ribbon ? std::move(*ribbon) : Ribbon::by_neighbor_id(g);
  ctx.basis = basis ? *basis : default_basis(g, ctx.ribbon);
  validate_basis(g, ctx.basis);
  ctx.facets = enumerate_facet_graphs(g, ctx.basis.node);
  ctx.weight = make_weight_function(g, ctx.basis.node, seed, ctx.facets);
  order_by_weight(ctx.facets, ctx.weight);
  ctx.graph = std::move(g);
  return ctx;
}

}  // namespace sepoly
