#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoproj/hypersurface.hpp"
#include "monoproj/projection.hpp"

namespace monoproj {

/// X meets the line through `base` and `dir` in the listed points.
struct IntersectionProfile {
  ProjectivePoint base;
  ProjectivePoint dir;
  std::vector<FibrePoint> points;

  /// Sum of the multiplicities; d for a line not on X.
  int degree() const;
  /// beta = sum of contact orders m_i - 1 = d - #points.
  int beta() const;
};

/// Throws GeometryError if the line lies on X.
IntersectionProfile intersection_profile(const Hypersurface &x, const ProjectivePoint &a,
                                         const ProjectivePoint &b);

int beta(const Hypersurface &x, const ProjectivePoint &a, const ProjectivePoint &b);

/// m - 1 for the intersection multiplicity m at Q. Throws GeometryError if Q
/// is not on both the line and X.
int contact_order(const Hypersurface &x, const ProjectivePoint &a, const ProjectivePoint &b,
                  const ProjectivePoint &q);

enum class LineClass { none, C1, C2, C3, C4 };

std::string to_string(LineClass c);

/// The line lies in the tangent cone at a singular point Q exactly when its
/// intersection multiplicity at Q exceeds mult_Q(X).
bool line_in_cone_at(const FibrePoint &q);

/// none unless beta > 1. C3: two or more singular points; C4: the line is in
/// the tangent cone at a singular point; C2: one singular point plus a
/// tangency at a smooth point; C1 otherwise.
LineClass classify_line(const std::vector<FibrePoint> &points);

struct TangencyRecord {
  PencilParameter parameter;
  bool contained = false;      ///< the line lies on X; never in V_P
  bool tangent_at_center = false;
  std::vector<FibrePoint> points;
  int beta = 0;
  /// Contact order of P itself (0 when P is not on the line's intersection).
  int center_contribution = 0;
  int beta_minus_center = 0;
  bool in_v = false;
  LineClass line_class = LineClass::none;
};

struct TangencyReport {
  ProjectionSetup setup;
  std::vector<TangencyRecord> records;
  std::size_t v_size() const;
};

/// Every line through P (a point of a plane curve, off X^sing) that is
/// tangent somewhere: the roots of the square-free discriminant of the
/// pencil, plus the tangent line at P for an inner centre. The frame is the
/// one monodromy_group uses for the same seed and attempt.
TangencyReport multitangent_lines_through(const Hypersurface &x, const ProjectivePoint &p,
                                          std::uint64_t seed, unsigned threads = 1,
                                          int attempt = 0);

struct ConeSectionCheck {
  bool verified = false;
  /// The plane K is spanned by P, Q (so the line is PQ) and r.
  ProjectivePoint r;
  MultiPoly section;
  TangentCone cone;
};

/// For P in X^sing, a line PQ in C_P(X) and a hyperplane H (linear form
/// coefficients; nullopt means the whole ambient space when X is a curve)
/// containing the line: restricts X to a seeded plane K with PQ in K in H
/// and checks that PQ lies in the tangent cone of X cap K at P. Throws
/// GeometryError when the preconditions fail.
ConeSectionCheck tangent_cone_section_check(const Hypersurface &x, const ProjectivePoint &p,
                                            const ProjectivePoint &q,
                                            const std::optional<std::vector<Rational>> &h,
                                            std::uint64_t seed);

} // namespace monoproj
