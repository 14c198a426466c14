#include "monoproj/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "monoproj/errors.hpp"
#include "monoproj/linalg.hpp"
#include "monoproj/parallel.hpp"
#include "monoproj/rng.hpp"
#include "monoproj/roots.hpp"

namespace monoproj {

std::string to_string(Verdict v) { return v == Verdict::uniform ? "uniform" : "non_uniform"; }

std::vector<Permutation> MonodromyResult::generators() const {
  std::vector<Permutation> g;
  for (const auto &b : branch_points)
    g.push_back(b.generator);
  return g;
}

namespace {

constexpr int base_point_tries = 32;

double segment_distance(const Complex &a, const Complex &b, const Complex &p) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0)
    return std::abs(p - a);
  const double u = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + u * ab));
}

struct LoopPlan {
  Complex base;
  std::vector<double> radius;
  double clearance = -1.0;
};

/// Radii and a clearance score for base point t0: the score is the smallest
/// ratio (distance from another marked point to a loop's segment) / (that
/// point's radius), so a score >= 1 keeps every segment out of the other
/// loops' discs.
LoopPlan plan_loops(const Complex &t0, const std::vector<Complex> &branch,
                    const std::vector<Complex> &marked) {
  LoopPlan plan;
  plan.base = t0;
  auto radius_of = [&](const Complex &b) {
    double m = std::abs(b - t0) / 2.0;
    for (const auto &a : marked)
      if (a != b)
        m = std::min(m, std::abs(a - b));
    return m / 2.0;
  };
  std::vector<double> marked_radius;
  for (const auto &a : marked)
    marked_radius.push_back(radius_of(a));
  double score = std::numeric_limits<double>::infinity();
  for (const auto &b : branch) {
    const double r = radius_of(b);
    plan.radius.push_back(r);
    const Complex entry = b - r * (b - t0) / std::abs(b - t0);
    for (std::size_t j = 0; j < marked.size(); ++j)
      if (marked[j] != b)
        score = std::min(score, segment_distance(t0, entry, marked[j]) / marked_radius[j]);
  }
  plan.clearance = score;
  return plan;
}

double min_separation(const std::vector<Complex> &z) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      m = std::min(m, std::abs(z[i] - z[j]));
  return m;
}

double closure_error(const TrackedPath &tr, const Permutation &perm) {
  double err = 0.0;
  for (std::size_t i = 0; i < tr.end.size(); ++i) {
    const Complex &target = tr.start[static_cast<std::size_t>(perm[static_cast<int>(i)])];
    err = std::max(err, std::abs(tr.end[i] - target) / std::max(1.0, std::abs(target)));
  }
  return err;
}

void finish_classification(MonodromyResult &r, const MonodromyOptions &opts) {
  const int e = r.covering_degree();
  r.group = GeneratedGroup(e, r.generators(), derive_seed(opts.seed, 0x300));
  r.classification = classify(r.group, derive_seed(opts.seed, 0x400));
  if (!r.classification.transitive)
    throw GeometryError("monodromy group is intransitive: X is reducible");
  r.verdict = r.group.order() == factorial(e) ? Verdict::uniform : Verdict::non_uniform;
  r.galois = r.classification.regular;
  r.degenerate_galois = e <= 2;
  r.decomposable_witness = r.classification.blocks;
}

} // namespace

std::vector<BranchPoint> branch_points(const ProjectionSetup &setup, double cluster_tol,
                                       unsigned threads) {
  if (!setup.is_plane_curve())
    throw std::invalid_argument("branch_points needs a plane curve");
  const auto params = discriminant_parameters(setup);
  std::vector<BranchPoint> out(params.size());
  parallel_for(params.size(), threads, [&](std::size_t i) {
    BranchPoint &b = out[i];
    b.parameter = params[i];
    const LineFibre fibre = pencil_fibre(setup, params[i].value, params[i].exact, cluster_tol);
    if (fibre.contained)
      throw GeometryError("a line through the centre lies on X");
    b.partition = fibre.covering_partition();
    b.singular_fibre = fibre.meets_singular_locus();
    if (b.partition.empty() || b.partition.front() < 2)
      throw DegeneracyError("fibre over a discriminant root came out reduced");
  });
  return out;
}

MonodromyResult monodromy_group(const ProjectionSetup &setup, const MonodromyOptions &opts) {
  if (!setup.is_plane_curve())
    throw std::invalid_argument("monodromy_group needs a plane curve; use section_monodromy");
  if (setup.content.degree() > 0)
    throw GeometryError("the tangent line at the centre lies on X: X is reducible");
  MonodromyResult r;
  r.setup = setup;
  const int e = setup.covering_degree;
  if (e > GeneratedGroup::max_degree)
    throw GeometryError("covering degree exceeds " + std::to_string(GeneratedGroup::max_degree));

  auto bps = branch_points(setup, opts.track.cluster_tol, opts.threads);
  std::vector<Complex> branch, marked;
  for (const auto &b : bps)
    branch.push_back(b.parameter.approx());
  marked = branch;
  if (setup.tangent_parameter) {
    const Complex tt(to_double(*setup.tangent_parameter), 0.0);
    if (std::none_of(bps.begin(), bps.end(),
                     [&](const BranchPoint &b) { return b.parameter.exact == setup.tangent_parameter; }))
      marked.push_back(tt);
  }
  double scale = 0.0;
  for (const auto &a : marked)
    scale = std::max(scale, std::abs(a));
  for (std::size_t i = 0; i < marked.size(); ++i)
    for (std::size_t j = i + 1; j < marked.size(); ++j)
      if (std::abs(marked[i] - marked[j]) < opts.collision_tol * std::max(1.0, scale))
        throw DegeneracyError("branch points collide");

  const ComplexFamily family(setup.fibre);
  std::mt19937_64 rng(derive_seed(opts.seed, 0x200 + static_cast<std::uint64_t>(setup.attempt)));
  const double big = std::max(2.0 * scale, 1.0);
  LoopPlan best;
  std::vector<Complex> base_fibre;
  for (int tries = 0; tries < base_point_tries; ++tries) {
    const double theta = 2.0 * M_PI * uniform01(rng);
    const Complex t0 = std::polar(big, theta);
    RootSet rs;
    try {
      rs = all_roots(family.at(t0), 1e-12, opts.track.cluster_tol);
    } catch (const RootFindingError &) {
      continue;
    }
    if (static_cast<int>(rs.roots.size()) != e)
      continue;
    const auto z = rs.values();
    double zs = 1.0;
    for (const auto &s : z)
      zs = std::max(zs, std::abs(s));
    if (e > 1 && min_separation(z) < 1e-4 * zs)
      continue;
    LoopPlan plan = plan_loops(t0, branch, marked);
    if (plan.clearance > best.clearance) {
      best = plan;
      base_fibre = z;
    }
    if (best.clearance >= 1.0)
      break;
  }
  if (best.clearance < 1e-3)
    throw DegeneracyError("no base point with clear loop segments");
  r.base_point = best.base;
  r.base_fibre = base_fibre;

  for (std::size_t i = 0; i < bps.size(); ++i) {
    bps[i].loop_radius = best.radius[i];
    bps[i].angle = std::arg((branch[i] - best.base) / (-best.base));
  }
  std::vector<std::size_t> order(bps.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return bps[a].angle < bps[b].angle; });
  std::vector<TrackedPath> tracked(bps.size());
  if (e > 1) {
    parallel_for(order.size(), opts.threads, [&](std::size_t k) {
      const BranchPoint &b = bps[order[k]];
      const LoopPath loop = LoopPath::around(best.base, b.parameter.approx(), b.loop_radius);
      tracked[k] = track_roots(family, loop, base_fibre, opts.track);
    });
  }
  Permutation product(e);
  for (std::size_t k = 0; k < order.size(); ++k) {
    BranchPoint b = bps[order[k]];
    if (e > 1) {
      b.generator = loop_permutation(tracked[k], opts.track.cluster_tol);
      r.max_closure_error = std::max(r.max_closure_error, closure_error(tracked[k], b.generator));
      r.accepted_steps += tracked[k].accepted_steps;
      r.rejected_steps += tracked[k].rejected_steps;
    } else {
      b.generator = Permutation(e);
    }
    b.cycle_type = cycle_type(b.generator);
    product = product * b.generator;
    r.branch_points.push_back(std::move(b));
  }
  r.product_is_identity = product.is_identity();
  if (!r.product_is_identity)
    throw DegeneracyError("product of the generators in loop order is not the identity");
  finish_classification(r, opts);
  return r;
}

MonodromyResult monodromy_group(const Hypersurface &x, const ProjectivePoint &p,
                                const MonodromyOptions &opts) {
  std::string last;
  for (int attempt = 0; attempt <= opts.max_reseeds; ++attempt) {
    const ProjectionSetup setup = setup_projection(x, p, opts.seed, attempt);
    try {
      MonodromyResult r = monodromy_group(setup, opts);
      r.reseeds = attempt;
      return r;
    } catch (const DegeneracyError &err) {
      last = err.what();
    }
  }
  throw DegeneracyError("monodromy failed after " + std::to_string(opts.max_reseeds) +
                        " re-seeds: " + last);
}

bool verify_cycle_structure(const MonodromyResult &result) {
  for (const auto &b : result.branch_points) {
    if (b.singular_fibre)
      continue;
    if (b.generator.degree() != result.covering_degree())
      return false;
    if (cycle_type(b.generator) != [&] {
          std::vector<int> full = b.partition;
          const int fixed = result.covering_degree() -
                            std::accumulate(full.begin(), full.end(), 0);
          full.insert(full.end(), static_cast<std::size_t>(std::max(0, fixed)), 1);
          return full;
        }())
      return false;
  }
  return true;
}

SectionResult section_monodromy(const Hypersurface &x, const ProjectivePoint &p, int trials,
                                const MonodromyOptions &opts) {
  const ProjectionSetup base = setup_projection(x, p, opts.seed);
  SectionResult out;
  out.center = p;
  out.kind = base.kind;
  out.covering_degree = base.covering_degree;
  if (trials < 1)
    throw std::invalid_argument("section_monodromy needs at least one trial");

  std::mt19937_64 rng(derive_seed(opts.seed, 0x500));
  std::vector<SectionTrial> all(static_cast<std::size_t>(trials));
  for (auto &tr : all) {
    for (;;) {
      std::vector<Rational> a, b;
      for (int i = 0; i < x.nvars(); ++i) {
        a.emplace_back(uniform_int(rng, -5, 5));
        b.emplace_back(uniform_int(rng, -5, 5));
      }
      if (rank({p.coords(), a, b}) == 3) {
        tr.p1 = ProjectivePoint(a);
        tr.p2 = ProjectivePoint(b);
        break;
      }
    }
  }
  auto run_trial = [&](std::size_t k) {
    SectionTrial &tr = all[k];
    MonodromyOptions sub = opts;
    sub.seed = derive_seed(opts.seed, 0x600 + k);
    sub.threads = 1;
    try {
      const Hypersurface curve(restrict_to_plane(x.poly(), p, tr.p1, tr.p2));
      const ProjectivePoint centre({Rational(1), Rational(0), Rational(0)});
      if (curve.is_singular_at(centre)) {
        tr.outcome = "singular_centre";
        tr.message = "plane lies in the tangent hyperplane at the centre";
        return;
      }
      tr.result = monodromy_group(curve, centre, sub);
      tr.outcome = to_string(tr.result->verdict);
    } catch (const GeometryError &err) {
      tr.outcome = "reducible";
      tr.message = err.what();
    } catch (const DegeneracyError &err) {
      tr.outcome = "degenerate";
      tr.message = err.what();
    }
  };
  std::size_t used = all.size();
  if (opts.threads <= 1) {
    for (std::size_t k = 0; k < all.size(); ++k) {
      run_trial(k);
      if (all[k].outcome == "uniform") {
        used = k + 1;
        break;
      }
    }
  } else {
    parallel_for(all.size(), opts.threads, run_trial);
    for (std::size_t k = 0; k < all.size(); ++k)
      if (all[k].outcome == "uniform") {
        used = k + 1;
        break;
      }
  }
  all.resize(used);
  out.trials = std::move(all);

  bool any_reducible = false, any_result = false;
  for (std::size_t k = 0; k < out.trials.size(); ++k) {
    const auto &tr = out.trials[k];
    if (tr.outcome == "uniform") {
      out.verdict = Verdict::uniform;
      out.deciding_trial = k;
      out.monte_carlo = false;
      out.confidence = 1;
      return out;
    }
    if (tr.outcome == "non_uniform") {
      if (!any_result)
        out.deciding_trial = k;
      any_result = true;
      ++out.confidence;
    }
    any_reducible = any_reducible || tr.outcome == "reducible";
  }
  if (any_result) {
    out.verdict = Verdict::non_uniform;
    out.monte_carlo = true;
    return out;
  }
  if (any_reducible)
    throw GeometryError("every sampled plane section through the centre is reducible");
  throw DegeneracyError("no plane section could be analysed");
}

} // namespace monoproj
