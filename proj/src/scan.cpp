#include "monoproj/scan.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "monoproj/errors.hpp"
#include "monoproj/parallel.hpp"
#include "monoproj/rng.hpp"
#include "monoproj/roots.hpp"
#include "monoproj/tangency.hpp"

namespace monoproj {

std::vector<Rational> GridSpec::values() const {
  std::vector<Rational> v;
  if (count == 1)
    return {lo};
  for (int k = 0; k < count; ++k)
    v.push_back(lo + (hi - lo) * Rational(k) / Rational(count - 1));
  return v;
}

GridSpec parse_grid(const std::string &text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos)
    throw ParseError("grid must look like lo:hi:count");
  GridSpec g;
  g.lo = parse_rational(text.substr(0, a));
  g.hi = parse_rational(text.substr(a + 1, b - a - 1));
  const std::string count = text.substr(b + 1);
  if (count.empty() || !std::all_of(count.begin(), count.end(), ::isdigit) || count.size() > 6)
    throw ParseError("grid count must be a positive integer", b + 1);
  g.count = std::stoi(count);
  if (g.count < 1)
    throw ParseError("grid count must be a positive integer", b + 1);
  return g;
}

std::string to_string(PointFilter f) {
  switch (f) {
  case PointFilter::outer:
    return "outer";
  case PointFilter::inner:
    return "inner";
  case PointFilter::both:
    break;
  }
  return "both";
}

PrefilterResult prefilter_point(const Hypersurface &x, const ProjectivePoint &p, std::uint64_t seed) {
  const auto report = multitangent_lines_through(x, p, seed);
  PrefilterResult r;
  r.v_size = report.v_size();
  r.pass = r.v_size >= 2;
  return r;
}

namespace {

std::uint64_t point_seed(std::uint64_t seed, const ProjectivePoint &p) {
  return derive_seed(seed, fnv1a(p.normalized().to_string()));
}

bool coords_less(const ProjectivePoint &a, const ProjectivePoint &b) {
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(),
                                      b.coords().end());
}

/// Rational roots of g found numerically and confirmed exactly.
std::vector<Rational> rational_roots(const QPoly &g) {
  std::vector<Rational> out;
  for (const auto &f : squarefree_decomposition(g)) {
    if (f.degree() < 1)
      continue;
    if (f.degree() == 1) {
      out.push_back(-f.coeff(0) / f.coeff(1));
      continue;
    }
    RootSet rs;
    try {
      rs = all_roots(to_complex(f));
    } catch (const RootFindingError &) {
      continue;
    }
    for (const auto &r : rs.roots) {
      if (std::abs(r.value.imag()) > 1e-9 * std::max(1.0, std::abs(r.value)))
        continue;
      const Rational q = rationalize(r.value.real(), 100000);
      if (f.eval(q) == 0)
        out.push_back(q);
    }
  }
  return out;
}

} // namespace

std::vector<ProjectivePoint> sample_inner_points(const Hypersurface &x, int count, std::uint64_t seed) {
  std::vector<ProjectivePoint> found;
  if (count <= 0)
    return found;
  std::set<std::string> seen;
  auto consider = [&](const std::vector<Rational> &c) {
    if (std::all_of(c.begin(), c.end(), [](const Rational &q) { return q == 0; }))
      return;
    const ProjectivePoint p = ProjectivePoint(c).normalized();
    if (!x.contains(p) || x.is_singular_at(p))
      return;
    if (seen.insert(p.to_string()).second)
      found.push_back(p);
  };
  const int n = x.nvars();
  const long h = n == 3 ? 4 : (n == 4 ? 2 : 1);
  std::vector<long> v(static_cast<std::size_t>(n), -h);
  for (;;) {
    std::vector<Rational> c(v.begin(), v.end());
    consider(c);
    int i = 0;
    while (i < n && v[i] == h)
      v[i++] = -h;
    if (i == n)
      break;
    ++v[i];
  }
  std::vector<ProjectivePoint> seeds = found;
  found.clear();
  seen.clear();
  std::mt19937_64 rng(derive_seed(seed, 0x800));
  const int max_tries = 200 * count + 500;
  for (int tries = 0; tries < max_tries && static_cast<int>(found.size()) < count; ++tries) {
    std::vector<Rational> base, dir;
    if (!seeds.empty() && uniform01(rng) < 0.8) {
      base = seeds[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(seeds.size()) - 1))].coords();
    } else {
      for (int i = 0; i < n; ++i)
        base.emplace_back(uniform_int(rng, -6, 6));
    }
    for (int i = 0; i < n; ++i)
      dir.emplace_back(uniform_int(rng, -9, 9));
    if (std::all_of(base.begin(), base.end(), [](const Rational &q) { return q == 0; }) ||
        std::all_of(dir.begin(), dir.end(), [](const Rational &q) { return q == 0; }) ||
        ProjectivePoint(base) == ProjectivePoint(dir))
      continue;
    const QPoly g = restrict_to_line(x.poly(), ProjectivePoint(base), ProjectivePoint(dir));
    if (g.is_zero())
      continue;
    for (const auto &r : rational_roots(g)) {
      std::vector<Rational> c;
      for (int i = 0; i < n; ++i)
        c.push_back(base[i] + r * dir[i]);
      consider(c);
      if (static_cast<int>(found.size()) >= count)
        break;
    }
    for (const auto &p : found)
      if (std::find(seeds.begin(), seeds.end(), p) == seeds.end())
        seeds.push_back(p);
  }
  found.resize(std::min<std::size_t>(found.size(), static_cast<std::size_t>(count)));
  return found;
}

namespace {

void fill_from(ScanRecord &rec, const MonodromyResult &m) {
  rec.status = to_string(m.verdict);
  rec.order = m.group.order();
  rec.group_class = m.classification.group_class;
  rec.galois = m.galois;
  rec.degenerate_galois = m.degenerate_galois;
}

ScanRecord process_point(const Hypersurface &x, const ProjectivePoint &p, const ScanOptions &opts,
                         bool cross_check) {
  ScanRecord rec;
  rec.point = p.normalized();
  rec.kind = x.contains(p) ? CenterKind::inner : CenterKind::outer;
  rec.covering_degree = rec.kind == CenterKind::inner ? x.degree() - 1 : x.degree();
  if (x.is_singular_at(p)) {
    rec.status = "excluded";
    rec.message = "singular point of X";
    return rec;
  }
  MonodromyOptions mo = opts.monodromy;
  mo.seed = point_seed(opts.monodromy.seed, p);
  mo.threads = 1;
  if (opts.time_cap > 0)
    mo.track.deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(opts.time_cap));
  try {
    if (x.dimension() >= 2) {
      rec.method = "section";
      const SectionResult s = section_monodromy(x, p, opts.section_trials, mo);
      fill_from(rec, s.result());
      rec.status = to_string(s.verdict);
      rec.monte_carlo = s.monte_carlo;
      return rec;
    }
    const PrefilterResult pre = prefilter_point(x, p, mo.seed);
    rec.v_size = pre.v_size;
    if (!pre.pass) {
      const int e = rec.covering_degree;
      rec.method = "prefilter";
      rec.status = to_string(Verdict::uniform);
      rec.order = factorial(e);
      rec.group_class = GroupClass::symmetric;
      rec.galois = e <= 2;
      rec.degenerate_galois = e <= 2;
      if (cross_check) {
        try {
          rec.cross_check_verdict = monodromy_group(x, p, mo).verdict;
          rec.cross_checked = true;
        } catch (const std::runtime_error &err) {
          rec.message = std::string("cross-check failed: ") + err.what();
        }
      }
      return rec;
    }
    rec.method = "monodromy";
    fill_from(rec, monodromy_group(x, p, mo));
  } catch (const BudgetExceeded &err) {
    rec.status = "undecided";
    rec.message = err.what();
  } catch (const GeometryError &err) {
    rec.status = "error";
    rec.message = err.what();
  } catch (const DegeneracyError &err) {
    rec.status = "error";
    rec.message = err.what();
  }
  return rec;
}

} // namespace

ScanReport scan_region(const Hypersurface &x, const ScanRegion &region, const ScanOptions &opts) {
  std::vector<ProjectivePoint> points;
  std::set<std::string> seen;
  auto add = [&](const ProjectivePoint &p) {
    if (static_cast<int>(p.size()) != x.nvars())
      throw GeometryError("scan point " + p.to_string() + " has the wrong number of coordinates");
    const bool inner = x.contains(p);
    if ((region.filter == PointFilter::outer && inner) || (region.filter == PointFilter::inner && !inner))
      return;
    const ProjectivePoint q = p.normalized();
    if (seen.insert(q.to_string()).second)
      points.push_back(q);
  };
  const int affine = x.nvars() - 1;
  if (region.grid) {
    const auto vals = region.grid->values();
    std::vector<std::size_t> idx(static_cast<std::size_t>(affine), 0);
    for (;;) {
      std::vector<Rational> c;
      for (int i = 0; i < affine; ++i)
        c.push_back(vals[idx[i]]);
      c.emplace_back(1);
      add(ProjectivePoint(c));
      int i = affine - 1;
      while (i >= 0 && idx[i] + 1 == vals.size())
        idx[i--] = 0;
      if (i < 0)
        break;
      ++idx[i];
    }
  }
  std::mt19937_64 rng(derive_seed(opts.monodromy.seed, 0x900));
  for (int k = 0, tries = 0; k < region.random_samples && tries < 100 * region.random_samples; ++tries) {
    std::vector<Rational> c;
    for (int i = 0; i < affine; ++i)
      c.push_back(make_rational(uniform_int(rng, -20, 20), uniform_int(rng, 1, 10)));
    c.emplace_back(1);
    if (x.contains(ProjectivePoint(c)))
      continue;
    add(ProjectivePoint(c));
    ++k;
  }
  const auto inner = sample_inner_points(x, region.inner_samples, opts.monodromy.seed);
  for (const auto &p : inner)
    add(p);
  for (const auto &p : region.extra_points)
    add(p);

  ScanReport report;
  report.records.resize(points.size());
  parallel_for(points.size(), opts.threads, [&](std::size_t i) {
    const std::uint64_t h = splitmix64(opts.monodromy.seed ^ fnv1a(points[i].to_string()));
    const bool cross = static_cast<double>(h >> 11) * 0x1.0p-53 < opts.cross_check_fraction;
    report.records[i] = process_point(x, points[i], opts, cross);
  });
  std::sort(report.records.begin(), report.records.end(),
            [](const ScanRecord &a, const ScanRecord &b) { return coords_less(a.point, b.point); });

  ScanSummary &s = report.summary;
  s.points = report.records.size();
  s.inner_requested = static_cast<std::size_t>(std::max(0, region.inner_samples));
  s.inner_found = inner.size();
  for (const auto &r : report.records) {
    if (r.method == "monodromy" || r.method == "section")
      ++s.candidates;
    if (r.status == "non_uniform")
      ++s.non_uniform;
    if (r.galois)
      ++s.galois;
    if (r.status == "undecided")
      ++s.undecided;
    if (r.status == "error")
      ++s.errors;
    if (r.status == "excluded")
      ++s.excluded;
    if (r.cross_checked) {
      ++s.cross_checked;
      if (r.cross_check_verdict == Verdict::non_uniform)
        ++s.soundness_violations;
    }
  }
  return report;
}

std::vector<ScanRecord> galois_search(const Hypersurface &x, const ScanRegion &region,
                                      const ScanOptions &opts) {
  std::vector<ScanRecord> out;
  for (auto &r : scan_region(x, region, opts).records)
    if (r.galois)
      out.push_back(std::move(r));
  return out;
}

} // namespace monoproj
