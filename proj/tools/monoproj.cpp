// monoproj: command-line frontend. Reports are JSON ("report_v1").

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "monoproj/errors.hpp"
#include "monoproj/monodromy.hpp"
#include "monoproj/parallel.hpp"
#include "monoproj/parse.hpp"
#include "monoproj/rng.hpp"
#include "monoproj/scan.hpp"
#include "monoproj/tangency.hpp"

#ifndef MONOPROJ_VERSION
#define MONOPROJ_VERSION "0.0.0"
#endif

using nlohmann::ordered_json;
using namespace monoproj;

namespace {

struct RunConfig {
  std::string subcommand;
  std::string poly;
  std::string point;
  std::uint64_t seed = 1;
  double eps_cluster = 1e-6;
  double track_tol = 1e-12;
  int trials = 5;
  std::string grid;
  int random_samples = 0;
  int inner_samples = 0;
  std::vector<std::string> extra_points;
  std::string filter = "both";
  double cross_check = 0.05;
  double time_cap = 5.0;
  unsigned threads = 1;
  std::string out;
  bool wall_clock = false;
  int verbosity = 0;
};

enum ExitCode { ok = 0, parse_error = 2, geometry_error = 3, degeneracy_error = 4 };

// Number of variables: from the point when given, else the largest variable
// the polynomial mentions (at least 3).
int infer_nvars(const RunConfig &cfg) {
  if (!cfg.point.empty())
    return static_cast<int>(parse_rational_list(cfg.point).size());
  MultiPoly f = parse_poly(cfg.poly, 6);
  int used = 0;
  for (const auto &[e, c] : f.terms())
    for (int i = 0; i < static_cast<int>(e.size()); ++i)
      if (e[i] > 0)
        used = std::max(used, i + 1);
  return std::max(used, 3);
}

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

ordered_json cplx(const Complex &z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json point_json(const ProjectivePoint &p) {
  const ProjectivePoint q = p.normalized();
  ordered_json a = ordered_json::array();
  for (const auto &c : q.coords())
    a.push_back(to_string(c));
  return a;
}

ordered_json config_json(const RunConfig &cfg, const Hypersurface &x) {
  const std::string canonical = x.poly().to_string(default_var_names(x.nvars()));
  ordered_json c;
  c["subcommand"] = cfg.subcommand;
  c["poly"] = cfg.poly;
  c["canonical_poly"] = canonical;
  c["input_hash"] = hex64(fnv1a(canonical + "|" + cfg.point));
  c["point"] = cfg.point;
  c["seed"] = cfg.seed;
  c["version"] = MONOPROJ_VERSION;
  c["tolerances"] = {{"eps_cluster", cfg.eps_cluster},
                     {"track_tol", cfg.track_tol},
                     {"delta_min", 1e-6},
                     {"collision_tol", 1e-9}};
  c["trials"] = cfg.trials;
  if (cfg.subcommand == "scan") {
    c["grid"] = cfg.grid;
    c["random_samples"] = cfg.random_samples;
    c["inner_samples"] = cfg.inner_samples;
    c["extra_points"] = cfg.extra_points;
    c["filter"] = cfg.filter;
    c["cross_check_fraction"] = cfg.cross_check;
    c["time_cap"] = cfg.time_cap;
  }
  c["threads"] = cfg.threads;
  c["out"] = cfg.out;
  return c;
}

MonodromyOptions monodromy_options(const RunConfig &cfg) {
  MonodromyOptions o;
  o.seed = cfg.seed;
  o.threads = cfg.threads;
  o.track.newton_tol = cfg.track_tol;
  o.track.cluster_tol = cfg.eps_cluster;
  return o;
}

ordered_json setup_json(const ProjectionSetup &s) {
  ordered_json j;
  j["dimension"] = s.surface.dimension();
  j["degree"] = s.surface.degree();
  j["center"] = point_json(s.center);
  j["kind"] = to_string(s.kind);
  j["covering_degree"] = s.covering_degree;
  j["attempt"] = s.attempt;
  if (s.is_plane_curve()) {
    j["origin"] = point_json(s.origin);
    j["direction"] = point_json(s.direction);
    j["discriminant_degree"] = s.discriminant.disc.degree();
    j["branch_parameter_count"] = s.discriminant.squarefree.degree();
    j["tangent_parameter"] =
        s.tangent_parameter ? ordered_json(to_string(*s.tangent_parameter)) : ordered_json();
  }
  return j;
}

ordered_json parameter_json(const PencilParameter &p) {
  ordered_json j;
  j["t"] = cplx(p.approx());
  j["exact"] = p.exact ? ordered_json(to_string(*p.exact)) : ordered_json();
  return j;
}

ordered_json fibre_point_json(const FibrePoint &q) {
  ordered_json j;
  ordered_json coords = ordered_json::array();
  for (const auto &c : q.coords)
    coords.push_back(cplx(hp::to_complex(c)));
  j["coords"] = coords;
  j["exact"] = q.exact ? point_json(*q.exact) : ordered_json();
  j["multiplicity"] = q.multiplicity;
  j["point_multiplicity"] = q.point_multiplicity;
  j["at_center"] = q.at_center;
  return j;
}

ordered_json tangency_json(const TangencyReport &rep) {
  ordered_json a = ordered_json::array();
  for (const auto &r : rep.records) {
    ordered_json j = parameter_json(r.parameter);
    j["contained"] = r.contained;
    j["tangent_at_center"] = r.tangent_at_center;
    j["beta"] = r.beta;
    j["center_contribution"] = r.center_contribution;
    j["beta_minus_center"] = r.beta_minus_center;
    j["in_v"] = r.in_v;
    j["class"] = to_string(r.line_class);
    ordered_json pts = ordered_json::array();
    for (const auto &q : r.points)
      pts.push_back(fibre_point_json(q));
    j["points"] = pts;
    a.push_back(j);
  }
  return a;
}

ordered_json group_json(const MonodromyResult &r) {
  const auto &c = r.classification;
  ordered_json g;
  g["order"] = c.order.get_str();
  g["class"] = to_string(c.group_class);
  g["flags"] = {{"transitive", c.transitive},
                {"primitive", c.primitive},
                {"regular", c.regular},
                {"abelian", c.abelian},
                {"contains_transposition", c.contains_transposition},
                {"galois", r.galois},
                {"degenerate_galois", r.degenerate_galois}};
  if (r.decomposable_witness) {
    ordered_json blocks = ordered_json::array();
    for (const auto &b : r.decomposable_witness->blocks) {
      ordered_json bb = ordered_json::array();
      for (int i : b)
        bb.push_back(i + 1);
      blocks.push_back(bb);
    }
    g["blocks"] = blocks;
  } else {
    g["blocks"] = nullptr;
  }
  return g;
}

void fill_monodromy(ordered_json &rep, const MonodromyResult &r) {
  rep["setup"] = setup_json(r.setup);
  ordered_json bps = ordered_json::array();
  ordered_json gens = ordered_json::array();
  for (const auto &b : r.branch_points) {
    ordered_json j = parameter_json(b.parameter);
    j["partition"] = b.partition;
    j["singular_fibre"] = b.singular_fibre;
    j["generator"] = b.generator.to_cycle_string();
    j["cycle_type"] = b.cycle_type;
    j["loop_radius"] = b.loop_radius;
    bps.push_back(j);
    gens.push_back(b.generator.to_cycle_string());
  }
  rep["branch_points"] = bps;
  rep["generators"] = gens;
  rep["group"] = group_json(r);
  rep["verdict"] = to_string(r.verdict);
  rep["galois"] = r.galois;
  rep["monodromy"] = {{"base_point", cplx(r.base_point)},
                      {"product_is_identity", r.product_is_identity},
                      {"max_closure_error", r.max_closure_error},
                      {"cycle_structure_verified", verify_cycle_structure(r)}};
  rep["timing"]["accepted_steps"] = r.accepted_steps;
  rep["timing"]["rejected_steps"] = r.rejected_steps;
  rep["timing"]["reseeds"] = r.reseeds;
}

ordered_json skeleton(const RunConfig &cfg, const Hypersurface &x) {
  ordered_json rep;
  rep["schema"] = "report_v1";
  rep["config"] = config_json(cfg, x);
  rep["setup"] = ordered_json::object();
  rep["branch_points"] = ordered_json::array();
  rep["generators"] = ordered_json::array();
  rep["group"] = nullptr;
  rep["verdict"] = nullptr;
  rep["tangency"] = ordered_json::array();
  rep["timing"] = ordered_json::object();
  return rep;
}

ordered_json section_json(const SectionResult &s) {
  ordered_json j;
  j["monte_carlo"] = s.monte_carlo;
  j["confidence"] = s.confidence;
  j["deciding_trial"] = s.deciding_trial;
  ordered_json trials = ordered_json::array();
  for (const auto &t : s.trials) {
    ordered_json tj;
    tj["p1"] = point_json(t.p1);
    tj["p2"] = point_json(t.p2);
    tj["outcome"] = t.outcome;
    tj["message"] = t.message;
    if (t.result) {
      tj["order"] = t.result->classification.order.get_str();
      tj["class"] = to_string(t.result->classification.group_class);
    }
    trials.push_back(tj);
  }
  j["trials"] = trials;
  return j;
}

ordered_json run_section(const RunConfig &cfg, const Hypersurface &x, const ProjectivePoint &p) {
  ordered_json rep = skeleton(cfg, x);
  SectionResult s = section_monodromy(x, p, cfg.trials, monodromy_options(cfg));
  fill_monodromy(rep, s.result());
  rep["setup"]["ambient_dimension"] = x.dimension();
  rep["setup"]["surface_center"] = point_json(s.center);
  rep["setup"]["surface_kind"] = to_string(s.kind);
  rep["setup"]["surface_covering_degree"] = s.covering_degree;
  rep["verdict"] = to_string(s.verdict);
  rep["section"] = section_json(s);
  return rep;
}

ordered_json run_analyze(const RunConfig &cfg, const Hypersurface &x, const ProjectivePoint &p) {
  if (x.dimension() >= 2)
    return run_section(cfg, x, p);
  ordered_json rep = skeleton(cfg, x);
  MonodromyResult r = monodromy_group(x, p, monodromy_options(cfg));
  fill_monodromy(rep, r);
  // Same frame as the monodromy run.
  TangencyReport t = multitangent_lines_through(x, p, cfg.seed, cfg.threads, r.setup.attempt);
  rep["tangency"] = tangency_json(t);
  rep["v_size"] = t.v_size();
  return rep;
}

ordered_json run_tangency(const RunConfig &cfg, const Hypersurface &x, const ProjectivePoint &p) {
  ordered_json rep = skeleton(cfg, x);
  TangencyReport t = multitangent_lines_through(x, p, cfg.seed, cfg.threads);
  rep["setup"] = setup_json(t.setup);
  rep["tangency"] = tangency_json(t);
  rep["v_size"] = t.v_size();
  return rep;
}

PointFilter parse_filter(const std::string &s) {
  if (s == "outer")
    return PointFilter::outer;
  if (s == "inner")
    return PointFilter::inner;
  if (s == "both")
    return PointFilter::both;
  throw ParseError("unknown point filter '" + s + "'");
}

ordered_json run_scan(const RunConfig &cfg, const Hypersurface &x) {
  ordered_json rep = skeleton(cfg, x);
  ScanRegion region;
  if (!cfg.grid.empty())
    region.grid = parse_grid(cfg.grid);
  region.random_samples = cfg.random_samples;
  region.inner_samples = cfg.inner_samples;
  region.filter = parse_filter(cfg.filter);
  for (const auto &e : cfg.extra_points) {
    ProjectivePoint q(parse_rational_list(e));
    if (static_cast<int>(q.size()) != x.nvars())
      throw ParseError("point '" + e + "' has the wrong number of coordinates");
    region.extra_points.push_back(q);
  }
  ScanOptions o;
  o.monodromy = monodromy_options(cfg);
  o.monodromy.threads = 1;
  o.threads = cfg.threads;
  o.cross_check_fraction = cfg.cross_check;
  o.time_cap = cfg.time_cap;
  o.section_trials = cfg.trials;
  ScanReport s = scan_region(x, region, o);

  rep["setup"] = {{"dimension", x.dimension()}, {"degree", x.degree()}};
  ordered_json records = ordered_json::array();
  ordered_json w = ordered_json::array();
  for (const auto &r : s.records) {
    ordered_json j;
    j["point"] = point_json(r.point);
    j["kind"] = to_string(r.kind);
    j["covering_degree"] = r.covering_degree;
    j["status"] = r.status;
    j["method"] = r.method;
    j["v_size"] = r.v_size ? ordered_json(*r.v_size) : ordered_json();
    j["order"] = r.order ? ordered_json(r.order->get_str()) : ordered_json();
    j["class"] = r.group_class ? ordered_json(to_string(*r.group_class)) : ordered_json();
    j["galois"] = r.galois;
    j["degenerate_galois"] = r.degenerate_galois;
    j["monte_carlo"] = r.monte_carlo;
    j["cross_checked"] = r.cross_checked;
    j["cross_check_verdict"] =
        r.cross_check_verdict ? ordered_json(to_string(*r.cross_check_verdict)) : ordered_json();
    j["message"] = r.message;
    if (r.status == "non_uniform")
      w.push_back(j["point"]);
    records.push_back(j);
  }
  const auto &m = s.summary;
  rep["verdict"] = w.empty() ? "no_non_uniform_points" : "non_uniform_points_found";
  rep["scan"] = {{"summary",
                  {{"points", m.points},
                   {"candidates", m.candidates},
                   {"non_uniform", m.non_uniform},
                   {"galois", m.galois},
                   {"undecided", m.undecided},
                   {"errors", m.errors},
                   {"excluded", m.excluded},
                   {"cross_checked", m.cross_checked},
                   {"soundness_violations", m.soundness_violations},
                   {"inner_requested", m.inner_requested},
                   {"inner_found", m.inner_found}}},
                 {"non_uniform_points", w},
                 {"records", records}};
  return rep;
}

int fail(int code, const std::string &kind, const std::string &what) {
  std::cerr << "monoproj: " << kind << ": " << what << "\n";
  return code;
}

} // namespace

int main(int argc, char **argv) {
  RunConfig cfg;
  cfg.threads = default_threads();

  CLI::App app{"Monodromy of projections of hypersurfaces from a point"};
  app.set_version_flag("--version", MONOPROJ_VERSION);
  app.require_subcommand(1);

  auto common = [&cfg](CLI::App *sub, bool needs_point) {
    sub->add_option("--poly", cfg.poly, "homogeneous polynomial in x,y,z[,w,...]")->required();
    auto *pt = sub->add_option("--point", cfg.point, "centre, e.g. \"1,0,0\" or \"1/2,3,-1\"");
    if (needs_point)
      pt->required();
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--eps-cluster", cfg.eps_cluster, "root cluster tolerance")
        ->capture_default_str();
    sub->add_option("--track-tol", cfg.track_tol, "Newton tolerance for path tracking")
        ->capture_default_str();
    sub->add_option("--trials", cfg.trials, "plane sections for surfaces")->capture_default_str();
    sub->add_option("--threads", cfg.threads, "worker threads (default: all cores)");
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    sub->add_flag("--wall-clock", cfg.wall_clock,
                  "add elapsed seconds to the report (breaks byte-identical reruns)");
    sub->add_flag("-v,--verbose", cfg.verbosity, "progress on stderr");
  };

  auto *analyze = app.add_subcommand("analyze", "monodromy group and verdict for one point");
  common(analyze, true);
  auto *tangency = app.add_subcommand("tangency", "tangent and multitangent lines through a point");
  common(tangency, true);
  auto *section = app.add_subcommand("section", "plane-section monodromy for surfaces");
  common(section, true);
  auto *scan = app.add_subcommand("scan", "search a region for non-uniform points");
  common(scan, false);
  scan->add_option("--grid", cfg.grid, "affine grid lo:hi:count per coordinate");
  scan->add_option("--random", cfg.random_samples, "seeded random outer points");
  scan->add_option("--inner", cfg.inner_samples, "seeded smooth points of X");
  scan->add_option("--extra", cfg.extra_points, "additional points");
  scan->add_option("--filter", cfg.filter, "outer, inner or both")->capture_default_str();
  scan->add_option("--cross-check", cfg.cross_check, "share of rejected points re-checked")
      ->capture_default_str();
  scan->add_option("--time-cap", cfg.time_cap, "seconds per point, 0 for none")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return parse_error;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.threads == 0)
    cfg.threads = 1;

  const auto t0 = std::chrono::steady_clock::now();
  ordered_json rep;
  try {
    const int nvars = infer_nvars(cfg);
    Hypersurface x(parse_hypersurface(cfg.poly, nvars));
    std::optional<ProjectivePoint> p;
    if (!cfg.point.empty())
      p = ProjectivePoint(parse_rational_list(cfg.point));
    if (cfg.verbosity > 0)
      std::cerr << "monoproj: " << cfg.subcommand << " on degree " << x.degree() << " in P^"
                << x.nvars() - 1 << "\n";

    if (cfg.subcommand == "analyze")
      rep = run_analyze(cfg, x, *p);
    else if (cfg.subcommand == "tangency")
      rep = run_tangency(cfg, x, *p);
    else if (cfg.subcommand == "section") {
      if (x.dimension() < 2)
        throw GeometryError("section needs a hypersurface of dimension >= 2");
      rep = run_section(cfg, x, *p);
    } else
      rep = run_scan(cfg, x);
  } catch (const ParseError &e) {
    return fail(parse_error, "parse error", e.what());
  } catch (const GeometryError &e) {
    return fail(geometry_error, "geometric precondition violated", e.what());
  } catch (const DegeneracyError &e) {
    return fail(degeneracy_error, "numerical degeneracy", e.what());
  } catch (const BudgetExceeded &e) {
    return fail(degeneracy_error, "time budget exceeded", e.what());
  }

  if (cfg.wall_clock)
    rep["timing"]["wall_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const std::string text = rep.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f)
      return fail(parse_error, "cannot open output", cfg.out);
    f << text;
  }
  return ok;
}
