#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "monoproj/rational.hpp"

namespace monoproj {

template <class R> using Matrix = std::vector<std::vector<R>>;

/// Fraction-free Bareiss determinant over an integral domain.
///
/// `Ring` supplies static zero(), one(), is_zero(r) and exact_div(a, b);
/// every division performed by the elimination is exact.
template <class Ring, class R>
R bareiss_determinant(Matrix<R> m) {
  const std::size_t n = m.size();
  if (n == 0)
    return Ring::one();
  bool negate = false;
  R prev = Ring::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (Ring::is_zero(m[k][k])) {
      std::size_t p = k + 1;
      while (p < n && Ring::is_zero(m[p][k]))
        ++p;
      if (p == n)
        return Ring::zero();
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = Ring::exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = Ring::zero();
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  if (negate)
    det = Ring::zero() - det;
  return det;
}

Rational determinant(const Matrix<Rational> &m);

/// Rank over Q by Gaussian elimination.
int rank(Matrix<Rational> m);

} // namespace monoproj
