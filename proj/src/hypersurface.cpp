#include "monoproj/hypersurface.hpp"

#include "monoproj/errors.hpp"
#include "monoproj/linalg.hpp"

namespace monoproj {

Hypersurface::Hypersurface(MultiPoly f) : f_(std::move(f)) {
  if (f_.nvars() < 3 || f_.nvars() > 6)
    throw GeometryError("hypersurface needs 3 to 6 homogeneous coordinates");
  if (f_.degree() < 1 || !f_.is_homogeneous())
    throw GeometryError("hypersurface polynomial must be homogeneous of degree >= 1");
  for (int i = 0; i < f_.nvars(); ++i)
    partials_.push_back(f_.partial(i));
}

bool Hypersurface::contains(const ProjectivePoint &p) const { return f_.eval(p.coords()) == 0; }

bool Hypersurface::is_singular_at(const ProjectivePoint &p) const {
  if (!contains(p))
    return false;
  for (const auto &d : partials_)
    if (d.eval(p.coords()) != 0)
      return false;
  return true;
}

QPoly restrict_to_line(const MultiPoly &f, const ProjectivePoint &base,
                       const ProjectivePoint &dir) {
  if (base == dir)
    throw GeometryError("line needs two distinct points");
  std::vector<QPoly> images;
  for (std::size_t i = 0; i < base.size(); ++i)
    images.push_back(QPoly{base[i], dir[i]});
  return f.evaluate<QPoly>(images, [](const Rational &q) { return QPoly::constant(q); });
}

MultiPoly restrict_to_plane(const MultiPoly &f, const ProjectivePoint &p0,
                            const ProjectivePoint &p1, const ProjectivePoint &p2) {
  if (rank({p0.coords(), p1.coords(), p2.coords()}) < 3)
    throw GeometryError("plane points are not independent");
  std::vector<MultiPoly> images;
  const ProjectivePoint *pts[] = {&p0, &p1, &p2};
  for (int i = 0; i < f.nvars(); ++i) {
    MultiPoly lin(3);
    for (int j = 0; j < 3; ++j) {
      Exponent e(3, 0);
      e[j] = 1;
      lin.add_term(e, (*pts[j])[i]);
    }
    images.push_back(std::move(lin));
  }
  MultiPoly g = f.substitute(images);
  if (g.is_zero())
    throw GeometryError("plane is contained in the hypersurface");
  return g;
}

std::vector<Rational> gradient_at(const MultiPoly &f, const ProjectivePoint &p) {
  std::vector<Rational> g;
  for (int i = 0; i < f.nvars(); ++i)
    g.push_back(f.partial(i).eval(p.coords()));
  return g;
}

TangentCone tangent_cone(const MultiPoly &f, const ProjectivePoint &p) {
  if (f.eval(p.coords()) != 0)
    throw GeometryError("tangent cone requested at a point off the hypersurface");
  const ProjectivePoint q = p.normalized();
  const int n = f.nvars();
  int k = n - 1;
  while (q[k] == 0)
    --k;
  // Affine chart x_k = 1 centred at P: x_i = u_i + P_i for i != k. The cone
  // form in u is then rewritten with u_i = x_i - P_i x_k.
  std::vector<MultiPoly> to_local;
  for (int i = 0; i < n; ++i) {
    if (i == k)
      to_local.push_back(MultiPoly::constant(n, Rational(1)));
    else
      to_local.push_back(MultiPoly::variable(n, i) + MultiPoly::constant(n, q[i]));
  }
  const MultiPoly local = f.substitute(to_local);
  TangentCone out;
  out.multiplicity = local.min_degree();
  const MultiPoly fm = local.homogeneous_part(out.multiplicity);
  std::vector<MultiPoly> back;
  for (int i = 0; i < n; ++i) {
    if (i == k)
      back.push_back(MultiPoly(n)); // u_k does not occur in fm
    else
      back.push_back(MultiPoly::variable(n, i) - MultiPoly::variable(n, k) * q[i]);
  }
  out.cone = fm.substitute(back);
  return out;
}

bool line_in_tangent_cone(const MultiPoly &f, const ProjectivePoint &p,
                          const ProjectivePoint &q) {
  if (p == q)
    throw GeometryError("line needs two distinct points");
  return tangent_cone(f, p).cone.eval(q.coords()) == 0;
}

} // namespace monoproj
