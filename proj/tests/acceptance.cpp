// Acceptance run: one PASS/FAIL line per criterion 1-10.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "monoproj/group.hpp"
#include "monoproj/monodromy.hpp"
#include "monoproj/parallel.hpp"
#include "monoproj/parse.hpp"
#include "monoproj/scan.hpp"
#include "monoproj/tangency.hpp"
#include "monoproj/track.hpp"

using namespace monoproj;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Hypersurface hyp(const std::string &text, int nvars = 3) {
  return Hypersurface(parse_hypersurface(text, nvars));
}

ProjectivePoint pt(const std::string &text) { return ProjectivePoint(parse_rational_list(text)); }

const char *const fermat4 = "x^4+y^4+z^4";
const char *const generic_quartic = "x^4+2*x^3*y-3*x*y^2*z+y^4-x^2*z^2+5*y*z^3+2*z^4+x*y*z^2";
const char *const generic_cubic = "x^3+2*y^3-z^3+x*y*z-3*x^2*z+y*z^2";
const char *const nodal = "z*y^2-x^3-x^2*z";
const char *const cusp = "z*y^2-x^3";

// Every monodromy run made here, for the run-wide invariants.
std::vector<MonodromyResult> all_runs;

MonodromyResult run(const Hypersurface &x, const ProjectivePoint &p, std::uint64_t seed) {
  MonodromyOptions o;
  o.seed = seed;
  MonodromyResult r = monodromy_group(x, p, o);
  all_runs.push_back(r);
  return r;
}

// Product of the generators in loop order, recomputed here.
bool product_is_identity(const MonodromyResult &r) {
  Permutation acc(r.covering_degree());
  for (const auto &b : r.branch_points)
    acc = acc * b.generator;
  return acc.is_identity();
}

std::size_t closure_order(int d, const std::vector<Permutation> &gens) {
  std::set<Permutation> seen{Permutation(d)};
  std::vector<Permutation> frontier{Permutation(d)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto &p : frontier)
      for (const auto &g : gens) {
        Permutation q = p * g;
        if (seen.insert(q).second)
          next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

// Dense quartic with coefficients in [-9, 9].
MultiPoly random_quartic(std::mt19937_64 &rng) {
  MultiPoly f(3);
  for (int a = 4; a >= 0; --a)
    for (int b = 4 - a; b >= 0; --b) {
      const long c = static_cast<long>(rng() % 19) - 9;
      if (c != 0)
        f.add_term({a, b, 4 - a - b}, Rational(c));
    }
  return f;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string note;
  void require(bool ok, const std::string &what) {
    if (!ok) {
      if (!pass)
        detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

int failures = 0;
// Lines are printed in criterion order at the end; criteria 3 and 9 run last
// because they look at every earlier run.
std::map<int, std::string> lines;

void criterion(int n, const std::string &name, const std::function<void(Outcome &)> &body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception &e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  if (!o.pass)
    ++failures;
  char head[64];
  std::snprintf(head, sizeof head, "%s %2d ", o.pass ? "PASS" : "FAIL", n);
  char time[32];
  std::snprintf(time, sizeof time, " (%.2fs)", seconds_since(t0));
  std::string line = head + name + time;
  if (!o.note.empty())
    line += " [" + o.note + "]";
  if (!o.pass)
    line += ": " + o.detail.str();
  lines[n] = line;
}

} // namespace

int main() {
  criterion(1, "Fermat quartic vertices are Galois points", [](Outcome &o) {
    const auto x = hyp(fermat4);
    for (const char *v : {"1,0,0", "0,1,0", "0,0,1"}) {
      const auto t0 = Clock::now();
      const auto r = run(x, pt(v), 1);
      const double dt = seconds_since(t0);
      const std::string at = std::string(" at ") + v;
      o.require(r.classification.order == 4, "order" + at);
      o.require(r.classification.group_class == GroupClass::cyclic_regular, "class" + at);
      o.require(r.classification.regular, "regular" + at);
      o.require(r.verdict == Verdict::non_uniform, "verdict" + at);
      o.require(r.galois, "galois" + at);
      // s^4 = -(t^4 + 1) in suitable coordinates: four totally ramified fibres.
      o.require(r.branch_points.size() == 4, "branch point count" + at);
      for (const auto &b : r.branch_points) {
        o.require(b.partition == std::vector<int>{4}, "partition" + at);
        o.require(cycle_type(b.generator) == std::vector<int>{4}, "4-cycle" + at);
      }
      o.require(dt < 1.0, "runtime" + at);
    }
  });

  criterion(2, "random quartics from generic outer points are uniform", [](Outcome &o) {
    std::mt19937_64 rng(20240611);
    int done = 0;
    while (done < 20) {
      const MultiPoly f = random_quartic(rng);
      if (f.degree() != 4 || !f.is_homogeneous())
        continue;
      const Hypersurface x(f);
      std::vector<Rational> c(3);
      for (auto &v : c)
        v = static_cast<long>(rng() % 11) - 5;
      if (c[0] == 0 && c[1] == 0 && c[2] == 0)
        continue;
      const ProjectivePoint p(c);
      if (x.contains(p))
        continue;
      ++done;
      const std::string tag = " on quartic " + std::to_string(done);
      const auto t0 = Clock::now();
      const auto r = run(x, p, 100 + done);
      const double dt = seconds_since(t0);
      // d(d-1) = 12 branch points: exact degree of the square-free discriminant.
      o.require(r.setup.discriminant.disc.degree() == 12, "discriminant degree" + tag);
      o.require(r.setup.discriminant.squarefree.degree() == 12, "square-free degree" + tag);
      o.require(r.branch_points.size() == 12, "branch point count" + tag);
      for (const auto &b : r.branch_points)
        o.require(b.partition == std::vector<int>({2, 1, 1}), "partition" + tag);
      o.require(r.classification.order == 24, "order" + tag);
      o.require(r.verdict == Verdict::uniform, "verdict" + tag);
      o.require(dt < 5.0, "runtime" + tag);
    }
  });

  // Further fixtures used by criteria 3, 6 and 9.
  struct Fixture {
    const char *poly;
    const char *point;
  };
  const std::vector<Fixture> fixtures = {
      {"x^2+y^2-z^2", "1,2,5"},   {"x^2+y^2-z^2", "3,4,5"},  {fermat4, "1,0,0"},
      {fermat4, "1,0,1"},         {generic_quartic, "3,-2,7"}, {nodal, "1,2,5"},
      {generic_cubic, "1,1,1"},   {"y^2*z-x^3-x*z^2-z^3", "0,1,1"}, {"x^3+y^3+z^3", "1,0,0"},
      {cusp, "2,1,3"}};

  criterion(6, "seed invariance on 10 fixtures", [&](Outcome &o) {
    for (const auto &f : fixtures) {
      const auto x = hyp(f.poly);
      const auto a = run(x, pt(f.point), 11);
      const auto b = run(x, pt(f.point), 987654321);
      const std::string tag = std::string(" for ") + f.poly + " at " + f.point;
      o.require(a.setup.origin.coords() != b.setup.origin.coords() ||
                    a.setup.direction.coords() != b.setup.direction.coords(),
                "same frame" + tag);
      o.require(a.classification.order == b.classification.order, "order" + tag);
      o.require(a.classification.group_class == b.classification.group_class, "class" + tag);
      o.require(a.verdict == b.verdict, "verdict" + tag);
    }
  });

  criterion(7, "Schreier-Sims order equals closure order", [](Outcome &o) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
      const int d = 3 + static_cast<int>(rng() % 5);
      std::vector<Permutation> gens;
      const int ngens = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < ngens; ++k) {
        std::vector<int> img(d);
        for (int i = 0; i < d; ++i)
          img[i] = i;
        for (int i = d - 1; i > 0; --i)
          std::swap(img[i], img[rng() % (i + 1)]);
        gens.emplace_back(img);
      }
      const GeneratedGroup g(d, gens, rng());
      const std::size_t closure = closure_order(d, gens);
      o.require(closure <= 5040, "order bound");
      o.require(g.order() == closure, "trial " + std::to_string(trial));
    }
  });

  criterion(8, "tangent-cone sections on nodal and cuspidal cubics", [](Outcome &o) {
    // Cones at (0:0:1): y^2 - x^2 for the node, y^2 for the cusp.
    const auto n = hyp(nodal);
    const auto c = hyp(cusp);
    const auto centre = pt("0,0,1");
    o.require(tangent_cone(n.poly(), centre).multiplicity == 2, "node multiplicity");
    o.require(tangent_cone(c.poly(), centre).multiplicity == 2, "cusp multiplicity");
    for (const char *q : {"1,1,0", "1,-1,0"})
      for (std::uint64_t seed : {1, 2, 3})
        o.require(tangent_cone_section_check(n, centre, pt(q), std::nullopt, seed).verified,
                  std::string("node line ") + q);
    for (std::uint64_t seed : {1, 2, 3})
      o.require(tangent_cone_section_check(c, centre, pt("1,0,0"), std::nullopt, seed).verified,
                "cusp line");
  });

  criterion(5, "conic 21x21 grid plus 50 inner points has no non-uniform point", [](Outcome &o) {
    ScanRegion region;
    region.grid = parse_grid("-1:1:21");
    region.inner_samples = 50;
    ScanOptions opts;
    opts.monodromy.seed = 5;
    opts.threads = default_threads();
    const auto rep = scan_region(hyp("x^2+y^2-z^2"), region, opts);
    o.require(rep.summary.inner_found == 50, "inner points found");
    o.require(rep.summary.non_uniform == 0, "non-uniform points");
    o.require(rep.summary.undecided == 0 && rep.summary.errors == 0, "undecided or errors");
    for (const auto &r : rep.records)
      o.require(r.status == "uniform", "status " + r.status + " at " + r.point.to_string());
  });

  criterion(4, "non-uniform points have two multitangent lines; prefilter is sound", [](Outcome &o) {
    struct ScanFixture {
      const char *poly;
      const char *grid;
      int random = 0;
      int inner = 0;
      std::vector<const char *> extra;
    };
    const std::vector<ScanFixture> scans = {
        {"x^2+y^2-z^2", "-2:2:11", 0, 30, {}},
        {generic_cubic, "-2:2:11", 10, 30, {}},
        {"x^3+y^3+z^3", "-2:2:9", 0, 10, {"1,0,0", "0,1,0"}},
        {generic_quartic, "-2:2:9", 20, 10, {}},
        {fermat4, "-1:1:5", 0, 0, {"1,0,0", "0,1,0", "1,1,0"}},
        {nodal, "-2:2:7", 0, 10, {}},
    };
    std::size_t cross_checked = 0, violations = 0, non_uniform = 0;
    for (const auto &s : scans) {
      const auto x = hyp(s.poly);
      ScanRegion region;
      region.grid = parse_grid(s.grid);
      region.random_samples = s.random;
      region.inner_samples = s.inner;
      for (const char *e : s.extra)
        region.extra_points.push_back(pt(e));
      ScanOptions opts;
      opts.monodromy.seed = 44;
      opts.cross_check_fraction = 1.0;
      opts.time_cap = 0;
      opts.threads = default_threads();
      const auto rep = scan_region(x, region, opts);
      cross_checked += rep.summary.cross_checked;
      violations += rep.summary.soundness_violations;
      o.require(rep.summary.errors == 0, std::string("errors in scan of ") + s.poly);
      for (const auto &r : rep.records) {
        if (r.status != "non_uniform")
          continue;
        ++non_uniform;
        const std::string tag = std::string(" at ") + r.point.to_string() + " on " + s.poly;
        const auto t = multitangent_lines_through(x, r.point, 3);
        o.require(t.v_size() >= 2, "|V_P| < 2" + tag);
        if (r.kind == CenterKind::outer) {
          // Outer centre: beta of a line is sum(m - 1) over its covering fibre.
          const auto m = run(x, r.point, 3);
          std::size_t heavy = 0;
          for (const auto &b : m.branch_points) {
            int beta = 0;
            for (int k : b.partition)
              beta += k - 1;
            heavy += beta > 1;
          }
          o.require(heavy == t.v_size(), "partition count disagrees with |V_P|" + tag);
        }
      }
    }
    o.require(non_uniform > 0, "no non-uniform point in the fixtures");
    o.require(cross_checked >= 500, "only " + std::to_string(cross_checked) + " cross-checked");
    o.require(violations == 0, std::to_string(violations) + " soundness violations");
    o.note = std::to_string(non_uniform) + " non-uniform points, " +
             std::to_string(cross_checked) + " rejected points cross-checked";
  });

  criterion(10, "surface sections", [](Outcome &o) {
    MonodromyOptions opts;
    opts.seed = 10;
    const auto fermat = section_monodromy(hyp("x^4+y^4+z^4+w^4", 4), pt("1,0,0,0"), 5, opts);
    o.require(fermat.verdict == Verdict::non_uniform, "Fermat verdict");
    o.require(fermat.monte_carlo && fermat.confidence == 5, "Fermat 5/5");
    for (const auto &t : fermat.trials) {
      o.require(t.outcome == "non_uniform", "Fermat trial " + t.outcome);
      if (t.result) {
        o.require(t.result->classification.order == 4, "Fermat order");
        o.require(t.result->classification.group_class == GroupClass::cyclic_regular,
                  "Fermat class");
        all_runs.push_back(*t.result);
      }
    }
    const auto cubic = section_monodromy(hyp("x^3+y^3+z^3+w^3+x*y*z-2*y*z*w+3*x^2*w", 4),
                                         pt("2,-1,3,5"), 5, opts);
    o.require(cubic.verdict == Verdict::uniform, "cubic verdict");
    o.require(!cubic.monte_carlo, "cubic verdict is rigorous");
    o.require(cubic.deciding_trial == 0, "cubic decided on first section");
    o.require(cubic.result().classification.order == 6, "cubic order");
    all_runs.push_back(cubic.result());
  });

  criterion(3, "cycle structure and product relation on every run", [](Outcome &o) {
    for (const auto &r : all_runs) {
      const std::string tag = " for " + r.setup.surface.poly().to_string(default_var_names(3)) +
                              " at " + r.setup.center.to_string();
      o.require(verify_cycle_structure(r), "cycle structure" + tag);
      o.require(product_is_identity(r), "product" + tag);
      o.require(r.product_is_identity, "reported product" + tag);
    }
    o.note = std::to_string(all_runs.size()) + " runs";
  });

  criterion(9, "loop closure and reversal", [](Outcome &o) {
    double worst = 0;
    for (const auto &r : all_runs) {
      worst = std::max(worst, r.max_closure_error);
      o.require(r.max_closure_error <= 1e-8, "closure error " + std::to_string(r.max_closure_error));
    }
    // Reversed loops on a subset of the runs.
    std::size_t reversed = 0;
    for (std::size_t i = 0; i < all_runs.size(); i += 3) {
      const auto &r = all_runs[i];
      const ComplexFamily family(r.setup.fibre);
      for (const auto &b : r.branch_points) {
        const auto loop = LoopPath::around(r.base_point, b.parameter.approx(), b.loop_radius);
        const auto back = track_roots(family, loop.reversed(), r.base_fibre);
        o.require(loop_permutation(back) == b.generator.inverse(), "reversal");
        ++reversed;
      }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "worst closure %.3g, %zu reversed loops", worst, reversed);
    o.note = buf;
  });

  for (const auto &[n, line] : lines)
    std::printf("%s\n", line.c_str());
  return failures == 0 ? 0 : 1;
}
