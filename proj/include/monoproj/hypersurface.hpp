#pragma once

#include <string>
#include <vector>

#include "monoproj/multipoly.hpp"
#include "monoproj/unipoly.hpp"

namespace monoproj {

/// X = {f = 0} in P^{n+1}; f homogeneous of degree d in n+2 variables.
class Hypersurface {
public:
  Hypersurface() = default;
  /// Throws GeometryError unless f is homogeneous of degree >= 1 in 3..6
  /// variables.
  explicit Hypersurface(MultiPoly f);

  const MultiPoly &poly() const { return f_; }
  int degree() const { return f_.degree(); }
  /// Dimension n of X; ambient space is P^{n+1}.
  int dimension() const { return f_.nvars() - 2; }
  int nvars() const { return f_.nvars(); }

  bool contains(const ProjectivePoint &p) const;
  /// p in X and every partial vanishes at p.
  bool is_singular_at(const ProjectivePoint &p) const;
  const std::vector<MultiPoly> &partials() const { return partials_; }

private:
  MultiPoly f_;
  std::vector<MultiPoly> partials_;
};

/// g(s) = f(base + s * dir). Zero result means the line lies on X.
QPoly restrict_to_line(const MultiPoly &f, const ProjectivePoint &base,
                       const ProjectivePoint &dir);

/// Pullback of f along (a:b:c) -> a*p0 + b*p1 + c*p2. Throws GeometryError
/// if the points do not span a plane or the plane lies on X.
MultiPoly restrict_to_plane(const MultiPoly &f, const ProjectivePoint &p0,
                            const ProjectivePoint &p1,
                            const ProjectivePoint &p2);

std::vector<Rational> gradient_at(const MultiPoly &f, const ProjectivePoint &p);

struct TangentCone {
  /// Lowest-degree form f_m written in the homogeneous coordinates of the
  /// ambient space; it vanishes on a point Q iff the line PQ is in C_P(X).
  MultiPoly cone;
  int multiplicity = 0; ///< m = mult_P(X); 1 iff P is a smooth point
};

/// Throws GeometryError if f(P) != 0.
TangentCone tangent_cone(const MultiPoly &f, const ProjectivePoint &p);

/// True iff the line P Q lies in C_P(X), P in X.
bool line_in_tangent_cone(const MultiPoly &f, const ProjectivePoint &p,
                          const ProjectivePoint &q);

} // namespace monoproj
