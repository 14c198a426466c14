#include "monoproj/linalg.hpp"

namespace monoproj {

namespace {

struct RationalRing {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational &r) { return r == 0; }
  static Rational exact_div(const Rational &a, const Rational &b) { return a / b; }
};

} // namespace

Rational determinant(const Matrix<Rational> &m) {
  return bareiss_determinant<RationalRing>(m);
}

int rank(Matrix<Rational> m) {
  const std::size_t rows = m.size();
  if (rows == 0)
    return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0)
        continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

} // namespace monoproj
