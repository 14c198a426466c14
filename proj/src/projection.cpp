#include "monoproj/projection.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "monoproj/errors.hpp"
#include "monoproj/linalg.hpp"
#include "monoproj/rng.hpp"
#include "monoproj/roots.hpp"

namespace monoproj {

std::string to_string(CenterKind k) { return k == CenterKind::outer ? "outer" : "inner"; }

namespace {

constexpr long frame_range = 5;
constexpr int max_frame_tries = 64;

std::vector<Rational> random_vector(std::mt19937_64 &rng, int n) {
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i)
    v.emplace_back(uniform_int(rng, -frame_range, frame_range));
  return v;
}

Rational dot(const std::vector<Rational> &a, const std::vector<Rational> &b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

bool reduced_binary_form(const QPoly &h, int e) {
  if (h.is_zero() || h.degree() < e - 1)
    return false;
  Bivariate b;
  b.formal_degree = e;
  for (const auto &c : h.coeffs())
    b.by_s.push_back(QPoly::constant(c));
  try {
    discriminant_in_s(b);
  } catch (const GeometryError &) {
    return false;
  }
  return true;
}

/// g(t, s) = f(q0 + t q1 + s p), split by powers of s.
Bivariate pencil_family(const MultiPoly &f, const std::vector<Rational> &q0,
                        const std::vector<Rational> &q1, const std::vector<Rational> &p, int e) {
  std::vector<MultiPoly> images;
  for (int i = 0; i < f.nvars(); ++i) {
    MultiPoly lin(2);
    lin.add_term({0, 0}, q0[i]);
    lin.add_term({1, 0}, q1[i]);
    lin.add_term({0, 1}, p[i]);
    images.push_back(std::move(lin));
  }
  const MultiPoly g = f.substitute(images);
  std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(f.degree()) + 1);
  for (const auto &[ex, c] : g.terms()) {
    auto &row = dense[ex[1]];
    if (static_cast<int>(row.size()) <= ex[0])
      row.resize(static_cast<std::size_t>(ex[0]) + 1, Rational(0));
    row[ex[0]] = c;
  }
  Bivariate out;
  out.formal_degree = e;
  for (int k = 0; k <= e; ++k)
    out.by_s.push_back(QPoly(dense[k]));
  return out;
}

hp::Cplx hp_rational(const Rational &q) { return hp::Cplx(hp::to_real(q)); }

std::vector<hp::Cplx> line_coords(const ProjectionSetup &s, const hp::Cplx &t, const hp::Cplx &u) {
  std::vector<hp::Cplx> c;
  for (std::size_t i = 0; i < s.center.size(); ++i)
    c.push_back(hp_rational(s.origin[i]) + t * hp_rational(s.direction[i]) +
                u * hp_rational(s.center[i]));
  return c;
}

hp::Real binomial(int n, int k) {
  hp::Real r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

} // namespace

std::vector<Rational> ProjectionSetup::line_point(const Rational &t) const {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < origin.size(); ++i)
    v.push_back(origin[i] + t * direction[i]);
  return v;
}

ProjectionSetup setup_projection(const Hypersurface &x, const ProjectivePoint &p,
                                 std::uint64_t seed, int attempt) {
  if (static_cast<int>(p.size()) != x.nvars())
    throw GeometryError("centre has " + std::to_string(p.size()) + " coordinates, expected " +
                        std::to_string(x.nvars()));
  ProjectionSetup s;
  s.surface = x;
  s.center = p;
  s.seed = seed;
  s.attempt = attempt;
  const int d = x.degree();
  if (x.contains(p)) {
    if (x.is_singular_at(p))
      throw GeometryError("centre " + p.to_string() + " is a singular point of X");
    s.kind = CenterKind::inner;
    s.covering_degree = d - 1;
  } else {
    s.kind = CenterKind::outer;
    s.covering_degree = d;
  }
  if (s.covering_degree < 1)
    throw GeometryError("projection of a hyperplane from one of its points has degree 0");
  if (!s.is_plane_curve())
    return s;

  const int e = s.covering_degree;
  const auto grad = gradient_at(x.poly(), p);
  std::mt19937_64 rng(derive_seed(seed, 0x100 + static_cast<std::uint64_t>(attempt)));
  for (int tries = 0;; ++tries) {
    auto q0 = random_vector(rng, 3);
    auto q1 = random_vector(rng, 3);
    if (rank({p.coords(), q0, q1}) < 3)
      continue;
    if (tries >= max_frame_tries) {
      // Every line was rejected; a non-reduced f shows up as a vanishing
      // discriminant.
      discriminant_in_s(pencil_family(x.poly(), q0, q1, p.coords(), e));
      throw DegeneracyError("no admissible projection frame found");
    }
    if (s.kind == CenterKind::inner && dot(grad, q1) == 0)
      continue;
    // The line at t = infinity joins P and q1; its covering fibre must be
    // reduced so that no branch point escapes the finite t-plane.
    if (!reduced_binary_form(restrict_to_line(x.poly(), ProjectivePoint(q1), p), e))
      continue;
    s.origin = ProjectivePoint(q0);
    s.direction = ProjectivePoint(q1);
    s.fibre = pencil_family(x.poly(), q0, q1, p.coords(), e);
    break;
  }
  QPoly content;
  for (const auto &c : s.fibre.by_s)
    content = gcd(content, c);
  s.content = content;
  s.discriminant = discriminant_in_s(s.fibre);
  if (s.kind == CenterKind::inner) {
    const QPoly &lc = s.fibre.by_s[e];
    s.tangent_parameter = -lc.coeff(0) / lc.coeff(1);
  }
  return s;
}

hp::Cplx hp_eval(const QPoly &p, const hp::Cplx &z) {
  hp::Cplx acc(0);
  const auto &c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * z + hp_rational(*it);
  return acc;
}

int numeric_point_multiplicity(const Hypersurface &x, const std::vector<hp::Cplx> &q) {
  using HPoly = UniPoly<hp::Cplx>;
  {
    // Quick exit: a gradient that is large in double precision.
    std::vector<Complex> z;
    double zmax = 0, fnorm = 0, gnorm = 0;
    for (const auto &c : q) {
      z.push_back(hp::to_complex(c));
      zmax = std::max(zmax, std::abs(z.back()));
    }
    for (const auto &[e, c] : x.poly().terms())
      fnorm += std::abs(to_double(c));
    for (const auto &dp : x.partials())
      gnorm = std::max(gnorm, std::abs(dp.eval(z)));
    if (gnorm > 1e-6 * fnorm * x.degree() * std::pow(zmax, x.degree() - 1))
      return 1;
  }
  static const long dirs[2][6] = {{3, -7, 11, -13, 17, -19}, {5, 2, -9, 4, -6, 8}};
  const int d = x.degree();
  hp::Real qmax = 0, fnorm = 0;
  for (const auto &c : q)
    qmax = std::max(qmax, hp::Real(abs(c)));
  for (const auto &[e, c] : x.poly().terms())
    fnorm += abs(hp::to_real(c));
  const hp::Real tol("1e-40");
  int best = d;
  for (const auto &dir : dirs) {
    std::vector<HPoly> images;
    hp::Real rmax = 0;
    for (int i = 0; i < x.nvars(); ++i) {
      images.push_back(HPoly{q[i], hp::Cplx(dir[i])});
      rmax = std::max(rmax, hp::Real(std::abs(dir[i])));
    }
    const HPoly taylor = x.poly().evaluate<HPoly>(
        images, [](const Rational &c) { return HPoly::constant(hp_rational(c)); });
    for (int k = 0; k <= d; ++k) {
      const hp::Real scale = fnorm * binomial(d, k) * pow(qmax, d - k) * pow(rmax, k);
      if (abs(taylor.coeff(k)) > tol * scale) {
        best = std::min(best, k);
        break;
      }
    }
  }
  return best;
}

std::vector<int> LineFibre::covering_partition() const {
  std::vector<int> part;
  for (const auto &pt : points) {
    const int m = pt.at_center ? pt.multiplicity - 1 : pt.multiplicity;
    if (m > 0)
      part.push_back(m);
  }
  std::sort(part.rbegin(), part.rend());
  return part;
}

bool LineFibre::meets_singular_locus() const {
  return std::any_of(points.begin(), points.end(), [](const FibrePoint &p) { return p.singular(); });
}

LineFibre line_intersection(const Hypersurface &x, const std::vector<Rational> &base,
                            const ProjectivePoint &dir) {
  LineFibre out;
  const QPoly g = restrict_to_line(x.poly(), ProjectivePoint(base), dir);
  if (g.is_zero()) {
    out.contained = true;
    return out;
  }
  auto coords_at = [&](const hp::Cplx &s) {
    std::vector<hp::Cplx> c;
    for (std::size_t i = 0; i < base.size(); ++i)
      c.push_back(hp_rational(base[i]) + s * hp_rational(dir[i]));
    return c;
  };
  const auto factors = squarefree_decomposition(g);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const QPoly &fac = factors[k];
    const int mult = static_cast<int>(k) + 1;
    if (fac.degree() < 1)
      continue;
    if (fac.degree() == 1) {
      const Rational r = -fac.coeff(0) / fac.coeff(1);
      std::vector<Rational> c;
      for (std::size_t i = 0; i < base.size(); ++i)
        c.push_back(base[i] + r * dir[i]);
      FibrePoint pt;
      pt.s = hp_rational(r);
      pt.exact = ProjectivePoint(c);
      pt.coords = coords_at(pt.s);
      pt.multiplicity = mult;
      pt.point_multiplicity = tangent_cone(x.poly(), *pt.exact).multiplicity;
      out.points.push_back(std::move(pt));
      continue;
    }
    for (const auto &root : exact_roots(fac)) {
      FibrePoint pt;
      pt.s = root.value;
      pt.coords = coords_at(pt.s);
      pt.multiplicity = mult;
      pt.point_multiplicity = numeric_point_multiplicity(x, pt.coords);
      out.points.push_back(std::move(pt));
    }
  }
  const int at_dir = x.degree() - g.degree();
  if (at_dir > 0) {
    FibrePoint pt;
    pt.at_center = true;
    pt.exact = dir;
    for (const auto &c : dir.coords())
      pt.coords.push_back(hp_rational(c));
    pt.multiplicity = at_dir;
    pt.point_multiplicity = tangent_cone(x.poly(), dir).multiplicity;
    out.points.push_back(std::move(pt));
  }
  std::stable_sort(out.points.begin(), out.points.end(),
                   [](const FibrePoint &a, const FibrePoint &b) { return a.multiplicity > b.multiplicity; });
  return out;
}

LineFibre pencil_fibre(const ProjectionSetup &setup, const hp::Cplx &t,
                       const std::optional<Rational> &exact_t, double cluster_tol) {
  if (exact_t) {
    LineFibre out = line_intersection(setup.surface, setup.line_point(*exact_t), setup.center);
    out.t = t;
    out.exact_t = exact_t;
    return out;
  }
  LineFibre out;
  out.t = t;
  const Hypersurface &x = setup.surface;
  const int e = setup.covering_degree;
  std::vector<hp::Cplx> coeffs;
  for (int k = 0; k <= e; ++k)
    coeffs.push_back(hp_eval(setup.fibre.coeff(k), t));
  int total = 0;
  for (const auto &root : all_roots_hp(coeffs, cluster_tol)) {
    FibrePoint pt;
    pt.s = root.value;
    pt.coords = line_coords(setup, t, pt.s);
    pt.multiplicity = root.multiplicity;
    pt.point_multiplicity = numeric_point_multiplicity(x, pt.coords);
    out.points.push_back(std::move(pt));
    total += root.multiplicity;
  }
  if (total != e)
    throw DegeneracyError("fibre partition does not sum to the covering degree");
  if (setup.kind == CenterKind::inner) {
    // Off the tangent line at P the centre is a simple intersection.
    FibrePoint pt;
    pt.at_center = true;
    pt.exact = setup.center;
    for (const auto &c : setup.center.coords())
      pt.coords.push_back(hp_rational(c));
    out.points.push_back(std::move(pt));
  }
  std::stable_sort(out.points.begin(), out.points.end(),
                   [](const FibrePoint &a, const FibrePoint &b) { return a.multiplicity > b.multiplicity; });
  return out;
}

std::vector<PencilParameter> discriminant_parameters(const ProjectionSetup &setup) {
  std::vector<PencilParameter> out;
  const QPoly &sf = setup.discriminant.squarefree;
  if (sf.degree() < 1)
    return out;
  for (const auto &root : exact_roots(sf)) {
    PencilParameter p;
    p.value = root.value;
    const Complex z = p.approx();
    if (std::abs(z.imag()) <= 1e-10 * std::max(1.0, std::abs(z))) {
      const Rational r = rationalize(z.real(), 1000000);
      if (sf.eval(r) == 0) {
        p.exact = r;
        p.value = hp_rational(r);
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

} // namespace monoproj
