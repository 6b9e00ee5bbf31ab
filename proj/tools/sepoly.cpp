// sepoly: h*-vectors, gamma and interior polynomials of symmetric edge
// polytopes from Jaeger trees, with lattice-point cross-checks.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sepoly/sepoly.hpp"

using namespace sepoly;

namespace {

enum class Format { json, csv, plain };

struct Options {
  std::uint64_t seed = 1;
  std::string ribbon_path;
  std::string basis;
  std::string format = "json";
  double budget = kDefaultBudget;
  std::string input;
};

// Raised when an internal cross-check disagrees; maps to exit code 2.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format format_of(const Options& o) {
  if (o.format == "csv") return Format::csv;
  if (o.format == "plain") return Format::plain;
  return Format::json;
}

Context load(const Options& o) {
  auto parsed = parse_graph_file(o.input);
  auto ribbon = parsed.ribbon;
  if (!o.ribbon_path.empty()) ribbon = parse_ribbon(parsed.graph, read_file(o.ribbon_path));
  auto basis = parsed.basis;
  if (!o.basis.empty()) basis = parse_basis(parsed.graph, o.basis);
  return make_context(std::move(parsed.graph), std::move(ribbon), basis, o.seed);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string joined(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

OrderKind order_of(const std::string& s) {
  return s == "quad" ? OrderKind::quadratic : OrderKind::face_by_face;
}

int cmd_facets(const Options& o) {
  auto ctx = load(o);
  if (format_of(o) == Format::plain) {
    for (const auto& fg : ctx.facets) {
      std::cout << fg.id << ":";
      for (int x : fg.layering) std::cout << ' ' << x;
      std::cout << "  f=" << rational_string(facet_value(fg, ctx.weight)) << "\n";
    }
    return 0;
  }
  Json out = Json::array();
  for (const auto& fg : ctx.facets) out.push_back(to_json(ctx.graph, fg, ctx.weight));
  emit(out);
  return 0;
}

int cmd_jaeger(const Options& o, int facet, const std::string& order, bool histogram_only) {
  auto ctx = load(o);
  if (facet != 0 && (facet < 1 || facet > static_cast<int>(ctx.facets.size()))) {
    throw ParseError("facet id out of range 1.." + std::to_string(ctx.facets.size()));
  }
  std::vector<JaegerTree> trees;
  TailHistogram hist(static_cast<std::size_t>(ctx.graph.num_vertices()), 0);
  if (facet != 0) {
    trees = enumerate_jaeger_trees(ctx.graph, ctx.facet(facet), ctx.ribbon, ctx.basis);
    for (const auto& t : trees) ++hist.at(t.tail_count);
  } else {
    auto all = enumerate_all_jaeger(ctx);
    trees = std::move(all.trees);
    hist = std::move(all.histogram);
  }
  if (order != "none") sort_trees(ctx, order_of(order), trees);
  auto fmt = format_of(o);
  if (histogram_only) {
    if (fmt == Format::json) {
      emit(Json{{"histogram", hist}, {"trees", trees.size()}});
    } else if (fmt == Format::csv) {
      std::cout << "tail_edges,trees\n";
      for (std::size_t i = 0; i < hist.size(); ++i) std::cout << i << ',' << hist[i] << "\n";
    } else {
      std::cout << "histogram: " << joined(hist) << "\n";
    }
    return 0;
  }
  if (fmt == Format::json) {
    Json out = Json::array();
    for (const auto& t : trees) out.push_back(to_json(t));
    emit(out);
    return 0;
  }
  for (const auto& t : trees) {
    std::cout << t.facet << (fmt == Format::csv ? "," : ": ");
    std::string edges;
    for (const auto& d : t.tree.edges) {
      bool tail = std::binary_search(t.tail_edges.begin(), t.tail_edges.end(), d.edge);
      edges += (edges.empty() ? "" : " ") + std::to_string(d.tail) + ">" + std::to_string(d.head) +
               (tail ? "*" : "");
    }
    std::cout << edges << (fmt == Format::csv ? "," : "  r=") << t.tail_count << "\n";
  }
  return 0;
}

IntPolynomial oracle_checked(const Context& ctx, const IntPolynomial& hstar, double budget) {
  auto o = ehrhart_hstar_oracle(ctx.graph, budget);
  if (o != hstar) {
    throw CheckFailed("h* mismatch: jaeger " + hstar.to_string() + " vs lattice " + o.to_string());
  }
  return o;
}

int cmd_hstar(const Options& o, bool verify) {
  auto ctx = load(o);
  auto rep = hstar_report(ctx);
  if (verify) oracle_checked(ctx, rep.hstar, o.budget);
  if (format_of(o) == Format::plain) {
    std::cout << "hstar: " << rep.hstar.to_string() << "\ngamma: " << rep.gamma.to_string()
              << "\nvolume: " << rep.volume.str() << "\n";
    if (verify) std::cout << "lattice check: ok\n";
    return 0;
  }
  Json j{{"hstar", to_json(rep.hstar)},
         {"gamma", to_json(rep.gamma)},
         {"volume", big_to_json(rep.volume)},
         {"per_facet", rep.per_facet}};
  if (verify) j["verified"] = true;
  emit(j);
  return 0;
}

int cmd_gamma(const Options& o) {
  auto ctx = load(o);
  auto rep = hstar_report(ctx);
  if (format_of(o) == Format::plain) {
    std::cout << rep.gamma.to_string() << "\n";
  } else {
    emit(Json{{"gamma", to_json(rep.gamma)}});
  }
  return 0;
}

int cmd_interior(const Options& o, int facet) {
  auto ctx = load(o);
  IntPolynomial p;
  if (facet != 0) {
    if (facet < 1 || facet > static_cast<int>(ctx.facets.size())) {
      throw ParseError("facet id out of range 1.." + std::to_string(ctx.facets.size()));
    }
    p = interior_polynomial(ctx.graph, ctx.facet(facet), ctx.ribbon, ctx.basis);
  } else {
    p = interior_of_bipartite(ctx.graph, ctx.ribbon, ctx.basis);
  }
  if (format_of(o) == Format::plain) {
    std::cout << p.to_string() << "\n";
  } else {
    emit(Json{{"interior", to_json(p)}});
  }
  return 0;
}

int cmd_volume(const Options& o, const std::string& method, bool all) {
  auto ctx = load(o);
  auto jaeger = [&] { return hstar_report(ctx).volume; };
  auto lattice = [&] { return ehrhart_hstar_oracle(ctx.graph, o.budget).eval(1); };
  auto visibility = [&] {
    if (ctx.graph.cyclomatic_number() == 0) return jaeger();
    return visibility_volume(ctx.graph, ctx.ribbon, ctx.basis);
  };
  if (!all) {
    BigInt v = method == "lattice" ? lattice() : method == "visibility" ? visibility() : jaeger();
    if (format_of(o) == Format::plain) {
      std::cout << v.str() << "\n";
    } else {
      emit(Json{{"method", method}, {"volume", big_to_json(v)}});
    }
    return 0;
  }
  Json j{{"jaeger", big_to_json(jaeger())}};
  BigInt ref = jaeger();
  bool agree = true;
  try {
    BigInt l = lattice();
    j["lattice"] = big_to_json(l);
    agree = agree && l == ref;
  } catch (const BudgetExceeded& e) {
    j["lattice"] = "skipped: " + std::string(e.what());
  }
  if (bipartition(ctx.graph)) {
    BigInt v = visibility();
    j["visibility"] = big_to_json(v);
    agree = agree && v == ref;
  } else {
    j["visibility"] = "skipped: graph is not bipartite";
  }
  j["agree"] = agree;
  if (format_of(o) == Format::plain) {
    for (auto it = j.begin(); it != j.end(); ++it) std::cout << it.key() << ": " << it.value() << "\n";
  } else {
    emit(j);
  }
  return agree ? 0 : 2;
}

int cmd_shelling(const Options& o, const std::string& order, bool geometric) {
  auto ctx = load(o);
  auto all = enumerate_all_jaeger(ctx);
  auto trees = all.trees;
  auto kind = order_of(order);
  sort_trees(ctx, kind, trees);
  auto rep = shelling_report(ctx, trees, kind, geometric);
  if (rep.histogram != all.histogram) throw CheckFailed("shelling histogram differs from h*");
  auto fmt = format_of(o);
  if (fmt == Format::json) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < trees.size(); ++i) {
      Json e = to_json(trees[i]);
      e["r"] = rep.entries[i].r;
      if (rep.entries[i].attached) e["attached"] = *rep.entries[i].attached;
      entries.push_back(std::move(e));
    }
    Json j{{"order", order}, {"trees", entries}, {"histogram", rep.histogram}};
    if (geometric) j["geometric_ok"] = rep.geometric_ok;
    if (!rep.failure.empty()) j["failure"] = rep.failure;
    emit(j);
  } else {
    if (fmt == Format::csv) std::cout << "position,facet,r,attached\n";
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
      const auto& e = rep.entries[i];
      std::string att = e.attached ? std::to_string(*e.attached) : "";
      if (fmt == Format::csv) {
        std::cout << i << ',' << e.facet << ',' << e.r << ',' << att << "\n";
      } else {
        std::cout << i << ": facet " << e.facet << " r=" << e.r
                  << (e.attached ? " attached=" + att : "") << "\n";
      }
    }
    if (!rep.failure.empty()) std::cout << "failure: " << rep.failure << "\n";
  }
  if (!rep.geometric_ok) throw CheckFailed("geometric shelling check failed: " + rep.failure);
  return 0;
}

int cmd_verify(const Options& o, int trials) {
  auto ctx = load(o);
  const Graph& g = ctx.graph;
  const int n = g.num_vertices();
  Json checks = Json::object();
  bool ok = true;
  auto record = [&](const std::string& name, bool pass, const std::string& detail = "") {
    checks[name] = detail.empty() ? Json(pass ? "ok" : "FAIL") : Json(detail);
    ok = ok && pass;
  };
  auto all = enumerate_all_jaeger(ctx);
  auto hstar = hstar_from_histogram(all.histogram, n);
  record("palindromic", hstar.is_palindromic());
  record("linear_coefficient", hstar[1] == 2 * g.num_edges() - n + 1);
  try {
    auto lat = ehrhart_hstar_oracle(g, o.budget);
    record("lattice_hstar", lat == hstar,
           lat == hstar ? "" : "mismatch " + lat.to_string() + " vs " + hstar.to_string());
  } catch (const BudgetExceeded& e) {
    checks["lattice_hstar"] = "skipped: " + std::string(e.what());
  }
  std::vector<LatticeSimplex> simplices;
  bool unimodular = true;
  for (const auto& t : all.trees) {
    simplices.push_back(LatticeSimplex::of_tree(n, t.tree));
    unimodular = unimodular && is_unimodular(simplices.back());
  }
  record("unimodular", unimodular);
  auto spot = dissection_spot_check(g, simplices, trials, o.seed);
  record("dissection", spot.passed, spot.passed ? "" : spot.failure);
  int sticks = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.endpoints(e);
    for (Vertex t : {a, b}) sticks += stick_tree(ctx, make_directed(g, e, t)).has_value();
  }
  record("stick_trees", sticks == 2 * g.num_edges() - n + 1 &&
                            static_cast<std::uint64_t>(sticks) == all.histogram.at(1 % n));
  if (n <= 5) {
    for (OrderKind k : {OrderKind::face_by_face, OrderKind::quadratic}) {
      auto sorted = all.trees;
      sort_trees(ctx, k, sorted);
      auto rep = shelling_report(ctx, sorted, k, true);
      record(k == OrderKind::quadratic ? "shelling_quad" : "shelling_f", rep.geometric_ok,
             rep.geometric_ok ? "" : rep.failure);
    }
  }
  if (bipartition(g) && g.cyclomatic_number() > 0) {
    record("visibility", visibility_volume(g, ctx.ribbon, ctx.basis) == hstar.eval(1));
  }
  Json j{{"hstar", to_json(hstar)}, {"checks", checks}, {"ok", ok}};
  if (format_of(o) == Format::plain) {
    for (auto it = checks.begin(); it != checks.end(); ++it) {
      std::cout << it.key() << ": " << it.value().get<std::string>() << "\n";
    }
  } else {
    emit(j);
  }
  if (!ok) return 2;
  return 0;
}

int cmd_conjectures(const Options& o, int count, const BipartiteModel& model) {
  auto batch = run_conjectures(count, model, o.seed);
  auto fmt = format_of(o);
  if (fmt == Format::json) {
    Json rows = Json::array();
    for (const auto& r : batch.records) {
      rows.push_back({{"id", r.id},
                      {"edges", r.graph.edges},
                      {"gamma", to_json(r.gamma)},
                      {"interior", to_json(r.interior)},
                      {"degree_ok", r.degree_ok},
                      {"collision_ok", r.collision_ok},
                      {"minimal_ok", r.minimal_ok}});
    }
    emit(Json{{"records", rows},
              {"degree_violations", batch.degree_violations},
              {"collision_violations", batch.collision_violations},
              {"minimal_violations", batch.minimal_violations}});
  } else {
    write_conjecture_csv(std::cout, batch, model, o.seed);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"h*-vectors of symmetric edge polytopes via Jaeger trees"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "seed for every randomized choice")->capture_default_str();
  app.add_option("--ribbon", o.ribbon_path, "ribbon file (JSON array or one line per vertex)");
  app.add_option("--basis", o.basis, "base node-edge pair as node,edge");
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  app.add_option("--budget", o.budget, "work limit for the lattice-point oracle")
      ->capture_default_str();

  auto input = [&](CLI::App* sub) {
    sub->add_option("graph", o.input, "edge-list or JSON graph file")->required();
  };
  int facet = 0;
  std::string order = "f";
  bool histogram = false, verify = false, all = false, geometric = false;
  std::string method = "jaeger";
  int trials = 200;
  int count = 200;
  BipartiteModel model;

  auto* facets = app.add_subcommand("facets", "list facets with layering and f-value");
  input(facets);
  auto* jaeger = app.add_subcommand("jaeger", "enumerate Jaeger trees");
  input(jaeger);
  jaeger->add_option("--facet", facet, "restrict to one facet id");
  jaeger->add_option("--order", order, "tree order")->check(CLI::IsMember({"f", "quad", "none"}));
  jaeger->add_flag("--histogram", histogram, "print only the tail-edge histogram");
  auto* hstar = app.add_subcommand("hstar", "h*-polynomial, gamma and volume");
  input(hstar);
  hstar->add_flag("--verify", verify, "cross-check against lattice-point counts");
  auto* gamma = app.add_subcommand("gamma", "gamma-polynomial");
  input(gamma);
  auto* interior = app.add_subcommand("interior", "interior polynomial (bipartite, or --facet)");
  input(interior);
  interior->add_option("--facet", facet, "facet id");
  auto* volume = app.add_subcommand("volume", "normalized volume");
  input(volume);
  volume->add_option("--method", method)->check(CLI::IsMember({"jaeger", "lattice", "visibility"}));
  volume->add_flag("--all", all, "compare all three methods");
  auto* shelling = app.add_subcommand("shelling", "shelling order with attachment counts");
  input(shelling);
  shelling->add_option("--order", order)->check(CLI::IsMember({"f", "quad"}));
  shelling->add_flag("--geometric", geometric, "check attachments with exact point location");
  auto* verify_cmd = app.add_subcommand("verify", "run every cross-check on one graph");
  input(verify_cmd);
  verify_cmd->add_option("--trials", trials, "dissection spot-check samples")->capture_default_str();
  auto* conj = app.add_subcommand("conjectures", "random bipartite experiment as CSV");
  conj->add_option("--count", count)->capture_default_str();
  conj->add_option("--min-side", model.min_side)->capture_default_str();
  conj->add_option("--max-side", model.max_side)->capture_default_str();
  conj->add_option("--edge-probability", model.edge_probability)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*facets) return cmd_facets(o);
    if (*jaeger) return cmd_jaeger(o, facet, order, histogram);
    if (*hstar) return cmd_hstar(o, verify);
    if (*gamma) return cmd_gamma(o);
    if (*interior) return cmd_interior(o, facet);
    if (*volume) return cmd_volume(o, method, all);
    if (*shelling) return cmd_shelling(o, order, geometric);
    if (*verify_cmd) return cmd_verify(o, trials);
    if (*conj) {
      if (o.format == "json" && !app.get_option("--format")->count()) o.format = "csv";
      return cmd_conjectures(o, count, model);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 2;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
