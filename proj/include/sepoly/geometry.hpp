#pragma once
/**
 * Exact lattice geometry of the symmetric edge polytope: edge vectors,
 * unimodular simplices, lattice-point counting, point location, and the
 * volume formula that counts facets visible from one point per spanning tree.
 *
 * Points live in the hyperplane sum(x) = 0 of Q^n. Dropping the last
 * coordinate identifies its lattice with Z^(n-1), which is how determinants
 * and barycentric coordinates are computed.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sepoly/errors.hpp"
#include "sepoly/facets.hpp"
#include "sepoly/graph.hpp"
#include "sepoly/interior.hpp"
#include "sepoly/numeric.hpp"
#include "sepoly/poly.hpp"

namespace sepoly {

using RationalVec = std::vector<Rational>;
using IntVec = std::vector<int>;

/// +1 at the head, -1 at the tail.
inline IntVec edge_vector(const DirectedEdge& e, int n) {
  if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n || e.tail == e.head) {
    throw std::invalid_argument("directed edge endpoints out of range");
  }
  IntVec v(static_cast<std::size_t>(n), 0);
  v[e.head] = 1;
  v[e.tail] = -1;
  return v;
}

inline RationalVec to_rational(const IntVec& v) { return RationalVec(v.begin(), v.end()); }

/// conv{0, v_1, ..., v_k}: the cone over a tree's edge vectors.
struct LatticeSimplex {
  int dim_ambient = 0;
  std::vector<IntVec> vertices;  // apex at the origin is implicit

  static LatticeSimplex of_tree(int n, const SpanningTree& t) {
    LatticeSimplex s{n, {}};
    for (const auto& d : t.edges) s.vertices.push_back(edge_vector(d, n));
    return s;
  }
  static LatticeSimplex of_edges(int n, std::span<const DirectedEdge> es) {
    LatticeSimplex s{n, {}};
    for (const auto& d : es) s.vertices.push_back(edge_vector(d, n));
    return s;
  }
};

namespace detail {

// Square matrix whose columns are the simplex vertices minus their last
// coordinate.
inline std::vector<std::vector<BigInt>> reduced_matrix(const LatticeSimplex& s) {
  const int k = s.dim_ambient - 1;
  if (static_cast<int>(s.vertices.size()) != k) {
    throw DegenerateSimplex("simplex needs exactly n - 1 edge vectors, got " +
                            std::to_string(s.vertices.size()));
  }
  std::vector<std::vector<BigInt>> a(k, std::vector<BigInt>(k));
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) a[i][j] = s.vertices[j][i];
  }
  return a;
}

// Fraction-free elimination.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const int k = static_cast<int>(a.size());
  if (k == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int p = 0; p < k - 1; ++p) {
    if (a[p][p] == 0) {
      int r = p + 1;
      while (r < k && a[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j) {
        a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
      }
    }
    prev = a[p][p];
  }
  return sign * a[k - 1][k - 1];
}

}  // namespace detail

inline BigInt simplex_determinant(const LatticeSimplex& s) {
  return detail::bareiss_determinant(detail::reduced_matrix(s));
}

/// |det| == 1 for the edge vectors in the sum-zero lattice.
inline bool is_unimodular(const LatticeSimplex& s) {
  BigInt d = simplex_determinant(s);
  if (d == 0) throw DegenerateSimplex("edge vectors are linearly dependent");
  return abs(d) == 1;
}

enum class Location : std::uint8_t { interior, boundary, outside };

/// Precomputed inverse of a simplex's reduced matrix for repeated location.
class SimplexLocator {
 public:
  explicit SimplexLocator(const LatticeSimplex& s) : n_(s.dim_ambient) {
    auto a = detail::reduced_matrix(s);
    const int k = n_ - 1;
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(2 * k, 0));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) m[i][j] = Rational(a[i][j]);
      m[i][k + i] = 1;
    }
    for (int c = 0; c < k; ++c) {
      int p = c;
      while (p < k && m[p][c] == 0) ++p;
      if (p == k) throw DegenerateSimplex("edge vectors are linearly dependent");
      std::swap(m[p], m[c]);
      Rational inv = 1 / m[c][c];
      for (auto& x : m[c]) x *= inv;
      for (int i = 0; i < k; ++i) {
        if (i == c || m[i][c] == 0) continue;
        Rational f = m[i][c];
        for (int j = 0; j < 2 * k; ++j) m[i][j] -= f * m[c][j];
      }
    }
    inv_.assign(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) inv_[i][j] = m[i][k + j];
    }
  }

  /// Barycentric coordinates (apex first) of a point of the hyperplane.
  RationalVec barycentric(const RationalVec& p) const {
    if (static_cast<int>(p.size()) != n_) throw std::invalid_argument("point has the wrong length");
    Rational sum = 0;
    for (const auto& x : p) sum += x;
    if (sum != 0) throw std::invalid_argument("point does not lie in the sum-zero hyperplane");
    const int k = n_ - 1;
    RationalVec lambda(static_cast<std::size_t>(k) + 1, 0);
    Rational rest = 1;
    for (int i = 0; i < k; ++i) {
      Rational mu = 0;
      for (int j = 0; j < k; ++j) {
        if (inv_[i][j] != 0) mu += inv_[i][j] * p[j];
      }
      lambda[i + 1] = mu;
      rest -= mu;
    }
    lambda[0] = rest;
    return lambda;
  }

  /// Points off the sum-zero hyperplane have no barycentric solution and
  /// are reported as outside.
  Location locate(const RationalVec& p) const {
    if (static_cast<int>(p.size()) != n_) throw std::invalid_argument("point has the wrong length");
    Rational sum = 0;
    for (const auto& x : p) sum += x;
    if (sum != 0) return Location::outside;
    auto lambda = barycentric(p);
    bool zero = false;
    for (const auto& x : lambda) {
      if (x < 0) return Location::outside;
      if (x == 0) zero = true;
    }
    return zero ? Location::boundary : Location::interior;
  }

 private:
  int n_;
  std::vector<std::vector<Rational>> inv_;
};

inline Location point_in_simplex(const RationalVec& p, const LatticeSimplex& s) {
  return SimplexLocator(s).locate(p);
}

/// Vertices of P_G: both signs of every edge vector.
inline std::vector<IntVec> polytope_vertices(const Graph& g) {
  std::vector<IntVec> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.endpoints(e);
    out.push_back(edge_vector({e, a, b}, g.num_vertices()));
    out.push_back(edge_vector({e, b, a}, g.num_vertices()));
  }
  return out;
}

namespace detail {

// Every vertex has coordinates in {-1, 0, 1}, so kP sits inside the box
// |x_i| <= k; and each conormal attains exactly 1 on the vertex set.
inline void check_facet_description(const Graph& g, std::span<const FacetGraph> facets) {
  auto verts = polytope_vertices(g);
  for (const auto& v : verts) {
    for (int x : v) {
      if (x < -1 || x > 1) throw IntegrityError("polytope vertex leaves the unit box");
    }
  }
  for (const auto& fg : facets) {
    int best = -1000000;
    for (const auto& v : verts) {
      int s = 0;
      for (std::size_t i = 0; i < v.size(); ++i) s += fg.layering[i] * v[i];
      best = std::max(best, s);
    }
    if (best != 1) throw IntegrityError("facet conormal does not support the polytope at level 1");
  }
}

// level[x] = max(0, max over facets of <l, x>) over the box |x_i| <= k,
// sum(x) = 0; returns a histogram of levels 0..k.
inline std::vector<BigInt> level_histogram(const Graph& g, std::span<const FacetGraph> facets,
                                           int k) {
  const int n = g.num_vertices();
  const int nf = static_cast<int>(facets.size());
  std::vector<int> conormal(static_cast<std::size_t>(nf) * n);
  for (int f = 0; f < nf; ++f) {
    for (int v = 0; v < n; ++v) conormal[static_cast<std::size_t>(f) * n + v] = facets[f].layering[v];
  }
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(k) + 1, 0);
  // partial[i * nf + f]: dot product of the first i coordinates with facet f
  std::vector<long long> partial(static_cast<std::size_t>(n + 1) * nf, 0);
  auto rec = [&](auto&& self, int i, int sum) -> void {
    const int rem = n - 1 - i;  // coordinates left after this one
    if (i == n - 1) {
      int x = -sum;
      if (x < -k || x > k) return;
      long long level = 0;
      const long long* base = &partial[static_cast<std::size_t>(i) * nf];
      for (int f = 0; f < nf; ++f) {
        long long s = base[f] + static_cast<long long>(conormal[static_cast<std::size_t>(f) * n + i]) * x;
        if (s > level) {
          level = s;
          if (level > k) return;
        }
      }
      ++hist[static_cast<std::size_t>(level)];
      return;
    }
    for (int x = -k; x <= k; ++x) {
      int s = sum + x;
      if (s > k * rem || s < -k * rem) continue;
      const long long* src = &partial[static_cast<std::size_t>(i) * nf];
      long long* dst = &partial[static_cast<std::size_t>(i + 1) * nf];
      for (int f = 0; f < nf; ++f) {
        dst[f] = src[f] + static_cast<long long>(conormal[static_cast<std::size_t>(f) * n + i]) * x;
      }
      self(self, i + 1, s);
    }
  };
  rec(rec, 0, 0);
  std::vector<BigInt> out;
  for (auto h : hist) out.emplace_back(h);
  return out;
}

}  // namespace detail

/// |kP ∩ Z^n| by enumeration of the box |x_i| <= k in the sum-zero
/// hyperplane, filtered by every facet inequality <l, x> <= k.
inline BigInt count_lattice_points(const Graph& g, std::span<const FacetGraph> facets, int k) {
  if (k < 0) throw std::invalid_argument("dilation must be nonnegative");
  detail::check_facet_description(g, facets);
  auto hist = detail::level_histogram(g, facets, k);
  BigInt total = 0;
  for (const auto& h : hist) total += h;
  return total;
}

/// Lattice counts L(0..kmax) from a single pass over the largest box:
/// a point lies in kP exactly when its level is at most k.
inline std::vector<BigInt> lattice_counts(const Graph& g, std::span<const FacetGraph> facets,
                                          int kmax) {
  detail::check_facet_description(g, facets);
  auto hist = detail::level_histogram(g, facets, kmax);
  std::vector<BigInt> out;
  BigInt run = 0;
  for (const auto& h : hist) {
    run += h;
    out.push_back(run);
  }
  return out;
}

inline constexpr double kDefaultBudget = 1e9;

inline double oracle_work_estimate(int n) { return n * std::pow(2.0 * n, n); }

/// h* from lattice-point counts alone. One extra dilation beyond the degree
/// is counted to confirm the counts come from a polynomial of that degree.
inline IntPolynomial ehrhart_hstar_oracle(const Graph& g, double budget = kDefaultBudget) {
  const int n = g.num_vertices();
  double est = oracle_work_estimate(n);
  if (est > budget) {
    throw BudgetExceeded("lattice oracle estimate " + std::to_string(est) + " exceeds budget " +
                             std::to_string(budget),
                         est);
  }
  if (n == 1) return IntPolynomial{1};
  auto facets = enumerate_facet_graphs(g, 0);
  auto counts = lattice_counts(g, facets, n);
  return hstar_from_lattice_counts(std::span<const BigInt>(counts), n - 1);
}

struct SpotCheckReport {
  int trials = 0;
  int resamples = 0;
  bool passed = true;
  std::string failure;  // names the witness point when !passed
};

inline std::string format_point(const RationalVec& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p[i].str();
  }
  return s + ")";
}

/// Samples random points of P_G and checks that each lies in exactly one of
/// the simplices. Points on the boundary of some simplex are redrawn.
inline SpotCheckReport dissection_spot_check(const Graph& g,
                                             std::span<const LatticeSimplex> simplices, int trials,
                                             std::uint64_t seed) {
  SpotCheckReport rep;
  std::vector<SimplexLocator> loc;
  loc.reserve(simplices.size());
  for (const auto& s : simplices) loc.emplace_back(s);
  auto verts = polytope_vertices(g);
  const int n = g.num_vertices();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(1, 40);
  const int max_resamples = 20 * trials + 100;
  while (rep.trials < trials) {
    RationalVec p(static_cast<std::size_t>(n), 0);
    long long total = 0;
    std::vector<long long> w(verts.size());
    for (auto& x : w) {
      long long u = draw(rng);
      x = u * u * u * u;
      total += x;
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (int c = 0; c < n; ++c) {
        if (verts[i][c] != 0) p[c] += Rational(w[i] * verts[i][c], total);
      }
    }
    int inside = 0;
    bool on_boundary = false;
    for (const auto& l : loc) {
      auto where = l.locate(p);
      if (where == Location::interior) ++inside;
      else if (where == Location::boundary) on_boundary = true;
    }
    if (on_boundary) {
      if (++rep.resamples > max_resamples) {
        rep.passed = false;
        rep.failure = "too many boundary hits";
        return rep;
      }
      continue;
    }
    ++rep.trials;
    if (inside != 1) {
      rep.passed = false;
      rep.failure = (inside == 0 ? "uncovered point " : "point covered " + std::to_string(inside) +
                                                           " times: ") +
                    format_point(p);
      return rep;
    }
  }
  return rep;
}

/// Non-tree edges oriented so that the tour of the undirected spanning tree
/// `tree` meets each of them first at its tail.
inline std::vector<DirectedEdge> forced_non_tree_edges(const Graph& g, const Ribbon& r,
                                                       const Basis& b,
                                                       std::span<const EdgeId> tree) {
  std::vector<char> mask(g.num_edges(), 0);
  for (EdgeId e : tree) mask[e] = 1;
  Orientation all(g.num_edges(), 1);
  std::vector<char> seen(g.num_edges(), 0);
  std::vector<DirectedEdge> out;
  for (TourWalker w(g, all, r, b, mask); !w.done(); w.advance()) {
    auto s = w.current();
    if (mask[s.edge] || seen[s.edge]) continue;
    seen[s.edge] = 1;
    out.push_back(make_directed(g, s.edge, s.node));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// (1 + delta) / |E - T| * sum of the forced non-tree edge vectors, with
/// delta = 1 / (2|E|).
inline RationalVec visibility_point(const Graph& g, std::span<const DirectedEdge> non_tree) {
  if (non_tree.empty()) throw DomainError("a spanning tree with no non-tree edges has no point");
  const int n = g.num_vertices();
  Rational scale = (1 + Rational(1, 2 * g.num_edges())) / static_cast<long long>(non_tree.size());
  RationalVec p(static_cast<std::size_t>(n), 0);
  for (const auto& d : non_tree) {
    p[d.head] += scale;
    p[d.tail] -= scale;
  }
  return p;
}

/// Indices into `facets` of the facets with <l, p> > 1.
inline std::vector<std::size_t> visible_facets(std::span<const FacetGraph> facets,
                                               const RationalVec& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    Rational s = 0;
    for (std::size_t v = 0; v < p.size(); ++v) s += facets[i].layering[v] * p[v];
    if (s == 1) throw IntegrityError("visibility point lies on a facet hyperplane");
    if (s > 1) out.push_back(i);
  }
  return out;
}

/// Normalized volume of P_G for bipartite G as the total number of facets
/// visible from the points of all spanning trees.
inline BigInt visibility_volume(const Graph& g, const Ribbon& r, const Basis& b) {
  if (!bipartition(g)) throw DomainError("visibility volume needs a bipartite graph");
  if (g.cyclomatic_number() == 0) throw DomainError("visibility volume is undefined for trees");
  validate_basis(g, b);
  auto facets = enumerate_facet_graphs(g, b.node);
  BigInt total = 0;
  for_each_spanning_tree(g, [&](std::span<const EdgeId> tree) {
    auto forced = forced_non_tree_edges(g, r, b, tree);
    total += visible_facets(facets, visibility_point(g, forced)).size();
  });
  return total;
}

}  // namespace sepoly
