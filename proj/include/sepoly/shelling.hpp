#pragma once
/**
 * Attachment data of an ordered list of Jaeger trees: how many facets of
 * each cone simplex are glued onto the earlier ones, optionally confirmed
 * geometrically by locating points of those facets in earlier simplices.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepoly/context.hpp"
#include "sepoly/errors.hpp"
#include "sepoly/geometry.hpp"
#include "sepoly/jaeger.hpp"

namespace sepoly {

struct ShellingEntry {
  int facet = -1;
  int r = 0;                    // tail-edge count
  std::optional<int> attached;  // geometric count of glued facets
};

struct ShellingReport {
  std::vector<ShellingEntry> entries;
  TailHistogram histogram;
  bool geometric_ok = true;
  std::string failure;
};

namespace detail {

// Two points in the relative interior of conv{0, x_f : f != skip}.
inline std::vector<RationalVec> cone_facet_points(const LatticeSimplex& s, std::size_t skip) {
  const int n = s.dim_ambient;
  std::vector<RationalVec> pts;
  for (int variant = 0; variant < 2; ++variant) {
    RationalVec p(static_cast<std::size_t>(n), 0);
    long long total = 1;  // apex weight
    std::vector<long long> w(s.vertices.size(), 0);
    for (std::size_t j = 0; j < s.vertices.size(); ++j) {
      if (j == skip) continue;
      w[j] = variant == 0 ? 1 : static_cast<long long>(j) + 2;
      total += w[j];
    }
    for (std::size_t j = 0; j < s.vertices.size(); ++j) {
      if (!w[j]) continue;
      for (int c = 0; c < n; ++c) {
        if (s.vertices[j][c] != 0) p[c] += Rational(w[j] * s.vertices[j][c], total);
      }
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

}  // namespace detail

/// Per-tree attachment counts for `order`, which must be strictly sorted by
/// the chosen comparator. With `geometric`, each tree facet opposite a
/// tail-edge must lie in an earlier simplex and each facet opposite a
/// head-edge must not.
inline ShellingReport shelling_report(const Context& ctx, std::span<const JaegerTree> order,
                                      OrderKind kind, bool geometric) {
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (compare(ctx, kind, order[i - 1], order[i]) >= 0) {
      throw std::invalid_argument("trees are not sorted at position " + std::to_string(i));
    }
  }
  const int n = ctx.graph.num_vertices();
  ShellingReport rep;
  rep.histogram.assign(static_cast<std::size_t>(n), 0);
  std::vector<SimplexLocator> earlier;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& t = order[i];
    ShellingEntry entry{t.facet, t.tail_count, std::nullopt};
    ++rep.histogram.at(static_cast<std::size_t>(t.tail_count));
    if (geometric) {
      auto simplex = LatticeSimplex::of_tree(n, t.tree);
      int attached = 0;
      for (std::size_t j = 0; j < t.tree.edges.size(); ++j) {
        EdgeId e = t.tree.edges[j].edge;
        bool is_tail = std::binary_search(t.tail_edges.begin(), t.tail_edges.end(), e);
        auto pts = detail::cone_facet_points(simplex, j);
        std::vector<char> covered;
        for (const auto& p : pts) {
          bool hit = false;
          for (const auto& loc : earlier) {
            if (loc.locate(p) != Location::outside) {
              hit = true;
              break;
            }
          }
          covered.push_back(hit);
        }
        if (covered[0] != covered[1]) {
          rep.geometric_ok = false;
          if (rep.failure.empty()) {
            rep.failure = "tree " + std::to_string(i) + ": facet opposite edge " +
                          std::to_string(e) + " is only partly covered";
          }
        }
        if (covered[0]) ++attached;
        if (static_cast<bool>(covered[0]) != is_tail) {
          rep.geometric_ok = false;
          if (rep.failure.empty()) {
            rep.failure = "tree " + std::to_string(i) + ": facet opposite " +
                          std::string(is_tail ? "tail" : "head") + "-edge " + std::to_string(e) +
                          (is_tail ? " is not covered" : " is covered");
          }
        }
      }
      entry.attached = attached;
      earlier.emplace_back(simplex);
    }
    rep.entries.push_back(entry);
  }
  if (!order.empty() && rep.histogram[0] != 1) {
    throw IntegrityError("shelling does not start with exactly one tree without tail-edges");
  }
  return rep;
}

}  // namespace sepoly
