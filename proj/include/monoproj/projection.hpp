#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoproj/hp.hpp"
#include "monoproj/hypersurface.hpp"
#include "monoproj/resultant.hpp"

namespace monoproj {

enum class CenterKind { outer, inner };

std::string to_string(CenterKind k);

/// The projection from P restricted to X. For a plane curve the pencil of
/// lines through P is parametrized by t: line(t) joins P to
/// origin + t * direction, and a point of it is origin + t * direction + s * P.
///
/// For an inner centre the s^d coefficient vanishes, so P sits at s = infinity
/// on every line; the covering family is then g read as a binary form of
/// degree d - 1, whose root at infinity is the second intersection with P
/// (the blow-up at P). It escapes exactly on the tangent line at P.
struct ProjectionSetup {
  Hypersurface surface;
  ProjectivePoint center;
  CenterKind kind = CenterKind::outer;
  int covering_degree = 0;
  std::uint64_t seed = 0;
  int attempt = 0;

  // Plane curves only.
  ProjectivePoint origin;
  ProjectivePoint direction;
  Bivariate fibre;
  Discriminant discriminant;
  /// gcd of the coefficients of g: its roots are lines through P on X.
  QPoly content;
  /// Inner centre: parameter of the tangent line at P.
  std::optional<Rational> tangent_parameter;

  bool is_plane_curve() const { return surface.dimension() == 1; }
  std::vector<Rational> line_point(const Rational &t) const;
};

/// Throws GeometryError if P is a singular point of X, if X is not reduced
/// (identically vanishing discriminant), or if an inner centre lies on a
/// line. `attempt` selects the frame; different attempts give independent
/// frames.
ProjectionSetup setup_projection(const Hypersurface &x, const ProjectivePoint &p,
                                 std::uint64_t seed, int attempt = 0);

/// A point of X on a pencil line.
struct FibrePoint {
  hp::Cplx s;                          ///< position on the line (unused at the centre)
  std::vector<hp::Cplx> coords;        ///< homogeneous coordinates
  std::optional<ProjectivePoint> exact;
  int multiplicity = 1;                ///< intersection multiplicity with the line
  int point_multiplicity = 1;          ///< mult_Q(X); > 1 iff Q is singular
  bool at_center = false;              ///< the centre P (s = infinity)
  bool singular() const { return point_multiplicity > 1; }
};

/// Full intersection of a pencil line with X (the centre included when P is
/// on X).
struct LineFibre {
  hp::Cplx t;
  std::optional<Rational> exact_t;
  bool contained = false;  ///< the line lies on X
  std::vector<FibrePoint> points;

  /// Multiplicities of the covering fibre, descending: P's own intersection
  /// contributes one less than its multiplicity.
  std::vector<int> covering_partition() const;
  bool meets_singular_locus() const;
};

/// Exact intersection of the line base + s * dir with X. The point dir
/// (s = infinity) is flagged at_center when it lies on X.
LineFibre line_intersection(const Hypersurface &x, const std::vector<Rational> &base,
                            const ProjectivePoint &dir);

/// Intersection of the pencil line at t. An exact parameter gives exact
/// multiplicities through the square-free decomposition; otherwise the
/// roots are clustered at 100 digits and checked against the covering degree.
LineFibre pencil_fibre(const ProjectionSetup &setup, const hp::Cplx &t,
                       const std::optional<Rational> &exact_t, double cluster_tol = 1e-6);

/// Multiplicity of X at a numerically given point, read off the Taylor
/// expansion along a fixed generic direction.
int numeric_point_multiplicity(const Hypersurface &x, const std::vector<hp::Cplx> &q);

/// Exact roots of the square-free discriminant part, each with an exact
/// rational value when it has one.
struct PencilParameter {
  hp::Cplx value;
  std::optional<Rational> exact;
  Complex approx() const { return hp::to_complex(value); }
};
std::vector<PencilParameter> discriminant_parameters(const ProjectionSetup &setup);

/// Evaluates an exact polynomial at a high-precision point.
hp::Cplx hp_eval(const QPoly &p, const hp::Cplx &z);

} // namespace monoproj
