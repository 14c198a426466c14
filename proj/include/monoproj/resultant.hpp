#pragma once

#include <vector>

#include "monoproj/unipoly.hpp"

namespace monoproj {

/// Polynomial in s whose coefficients are polynomials in t:
/// g(t, s) = sum_k by_s[k](t) * s^k.
///
/// `formal_degree` is the covering degree in s; the actual top coefficient
/// may vanish at finitely many t (a fibre point escaping to s = infinity).
struct Bivariate {
  std::vector<QPoly> by_s;
  int formal_degree = 0;

  QPoly at_t(const Rational &t) const;
  Bivariate derivative_s() const;
  QPoly coeff(int k) const {
    return k >= 0 && k < static_cast<int>(by_s.size()) ? by_s[k] : QPoly{};
  }
  /// Max degree in t over all coefficients.
  int degree_t() const;
  bool is_zero() const;
};

/// Sylvester resultant of univariate polynomials over Q (Bareiss).
Rational resultant(const QPoly &a, const QPoly &b);

/// Sylvester resultant of a and b viewed in s with the given formal degrees,
/// computed in Q[t].
QPoly resultant_in_s(const Bivariate &a, int deg_a, const Bivariate &b,
                     int deg_b);

struct Discriminant {
  QPoly disc;        ///< discriminant of the binary form of formal degree e
  QPoly squarefree;  ///< monic square-free part of `disc`
};

/// Discriminant of g in s as a binary form of degree g.formal_degree:
/// (-1)^(e(e-1)/2) Res_s(g, dg/ds) / lc_s(g). Its roots are exactly the t
/// with a non-reduced fibre, counting a multiple root at s = infinity.
/// Throws GeometryError if it vanishes identically (non-reduced family).
Discriminant discriminant_in_s(const Bivariate &g);

} // namespace monoproj
