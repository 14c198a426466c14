#include "monoproj/tangency.hpp"

#include <algorithm>
#include <random>

#include "monoproj/errors.hpp"
#include "monoproj/linalg.hpp"
#include "monoproj/parallel.hpp"
#include "monoproj/rng.hpp"

namespace monoproj {

int IntersectionProfile::degree() const {
  int s = 0;
  for (const auto &p : points)
    s += p.multiplicity;
  return s;
}

int IntersectionProfile::beta() const { return degree() - static_cast<int>(points.size()); }

IntersectionProfile intersection_profile(const Hypersurface &x, const ProjectivePoint &a,
                                         const ProjectivePoint &b) {
  LineFibre fibre = line_intersection(x, a.coords(), b);
  if (fibre.contained)
    throw GeometryError("the line lies on X");
  IntersectionProfile out;
  out.base = a;
  out.dir = b;
  out.points = std::move(fibre.points);
  for (auto &p : out.points)
    p.at_center = false;
  return out;
}

int beta(const Hypersurface &x, const ProjectivePoint &a, const ProjectivePoint &b) {
  return intersection_profile(x, a, b).beta();
}

int contact_order(const Hypersurface &x, const ProjectivePoint &a, const ProjectivePoint &b,
                  const ProjectivePoint &q) {
  const auto profile = intersection_profile(x, a, b);
  for (const auto &p : profile.points)
    if (p.exact && *p.exact == q)
      return p.multiplicity - 1;
  throw GeometryError("point " + q.to_string() + " is not on the line and X");
}

std::string to_string(LineClass c) {
  switch (c) {
  case LineClass::C1:
    return "C1";
  case LineClass::C2:
    return "C2";
  case LineClass::C3:
    return "C3";
  case LineClass::C4:
    return "C4";
  case LineClass::none:
    break;
  }
  return "none";
}

bool line_in_cone_at(const FibrePoint &q) {
  return q.singular() && q.multiplicity > q.point_multiplicity;
}

LineClass classify_line(const std::vector<FibrePoint> &points) {
  int beta = 0, singular = 0;
  bool in_cone = false, smooth_tangency = false;
  for (const auto &p : points) {
    beta += p.multiplicity - 1;
    if (p.singular()) {
      ++singular;
      in_cone = in_cone || line_in_cone_at(p);
    } else if (p.multiplicity >= 2) {
      smooth_tangency = true;
    }
  }
  if (beta <= 1)
    return LineClass::none;
  if (singular >= 2)
    return LineClass::C3;
  if (in_cone)
    return LineClass::C4;
  if (singular == 1 && smooth_tangency)
    return LineClass::C2;
  return LineClass::C1;
}

std::size_t TangencyReport::v_size() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const TangencyRecord &r) { return r.in_v; }));
}

TangencyReport multitangent_lines_through(const Hypersurface &x, const ProjectivePoint &p,
                                          std::uint64_t seed, unsigned threads, int attempt) {
  if (x.dimension() != 1)
    throw std::invalid_argument("multitangent_lines_through needs a plane curve");
  TangencyReport out;
  out.setup = setup_projection(x, p, seed, attempt);
  const ProjectionSetup &s = out.setup;
  auto params = discriminant_parameters(s);
  std::optional<std::size_t> tangent_index;
  if (s.tangent_parameter) {
    for (std::size_t i = 0; i < params.size(); ++i)
      if (params[i].exact == s.tangent_parameter)
        tangent_index = i;
    if (!tangent_index) {
      PencilParameter tp;
      tp.exact = s.tangent_parameter;
      tp.value = hp::Cplx(hp::to_real(*s.tangent_parameter));
      params.push_back(tp);
      tangent_index = params.size() - 1;
    }
  }
  std::vector<TangencyRecord> recs(params.size());
  parallel_for(params.size(), threads, [&](std::size_t i) {
    TangencyRecord &r = recs[i];
    r.parameter = params[i];
    r.tangent_at_center = tangent_index == i;
    LineFibre fibre = pencil_fibre(s, params[i].value, params[i].exact);
    r.contained = fibre.contained;
    if (r.contained)
      return;
    r.points = std::move(fibre.points);
    for (const auto &q : r.points) {
      r.beta += q.multiplicity - 1;
      if (q.at_center)
        r.center_contribution = q.multiplicity - 1;
    }
    r.beta_minus_center = r.beta - r.center_contribution;
    r.in_v = r.beta_minus_center > 1;
    r.line_class = classify_line(r.points);
  });
  for (auto &r : recs)
    if (r.contained || r.beta >= 1)
      out.records.push_back(std::move(r));
  return out;
}

namespace {

Rational dot(const std::vector<Rational> &a, const std::vector<Rational> &b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

} // namespace

ConeSectionCheck tangent_cone_section_check(const Hypersurface &x, const ProjectivePoint &p,
                                            const ProjectivePoint &q,
                                            const std::optional<std::vector<Rational>> &h,
                                            std::uint64_t seed) {
  if (!x.is_singular_at(p))
    throw GeometryError("centre " + p.to_string() + " is not a singular point of X");
  if (p == q)
    throw GeometryError("the line needs two distinct points");
  if (!line_in_tangent_cone(x.poly(), p, q))
    throw GeometryError("the line is not in the tangent cone at " + p.to_string());
  if (h) {
    if (static_cast<int>(h->size()) != x.nvars())
      throw GeometryError("hyperplane has the wrong number of coefficients");
    if (x.nvars() == 3)
      throw GeometryError("a hyperplane of the plane cannot contain a plane section");
    if (dot(*h, p.coords()) != 0 || dot(*h, q.coords()) != 0)
      throw GeometryError("the line is not contained in the hyperplane");
  }
  ConeSectionCheck out;
  std::mt19937_64 rng(derive_seed(seed, 0x700));
  for (int tries = 0; tries < 256; ++tries) {
    std::vector<Rational> r;
    for (int i = 0; i < x.nvars(); ++i)
      r.emplace_back(uniform_int(rng, -5, 5));
    if (h) {
      const Rational hh = dot(*h, *h);
      const Rational k = dot(*h, r) / hh;
      for (int i = 0; i < x.nvars(); ++i)
        r[i] -= k * (*h)[i];
    }
    if (rank({p.coords(), q.coords(), r}) < 3)
      continue;
    MultiPoly section;
    try {
      section = restrict_to_plane(x.poly(), p, q, ProjectivePoint(r));
    } catch (const GeometryError &) {
      continue;  // the plane lies on X
    }
    out.r = ProjectivePoint(r);
    out.section = section;
    const ProjectivePoint pk({Rational(1), Rational(0), Rational(0)});
    const ProjectivePoint qk({Rational(0), Rational(1), Rational(0)});
    out.cone = tangent_cone(section, pk);
    out.verified = line_in_tangent_cone(section, pk, qk);
    return out;
  }
  throw GeometryError("no plane section through the line avoids X");
}

} // namespace monoproj
