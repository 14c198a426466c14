#include "monoproj/resultant.hpp"

#include <algorithm>

#include "monoproj/errors.hpp"
#include "monoproj/linalg.hpp"

namespace monoproj {

namespace {

struct RationalRing {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational &r) { return r == 0; }
  static Rational exact_div(const Rational &a, const Rational &b) { return a / b; }
};

struct QPolyRing {
  static QPoly zero() { return {}; }
  static QPoly one() { return QPoly::constant(Rational(1)); }
  static bool is_zero(const QPoly &p) { return p.is_zero(); }
  static QPoly exact_div(const QPoly &a, const QPoly &b) { return exact_divide(a, b); }
};

/// Sylvester matrix of a (degree m) and b (degree n); coefficient lists are
/// lowest degree first and padded to the formal degree.
template <class R>
Matrix<R> sylvester(const std::vector<R> &a, int m, const std::vector<R> &b, int n,
                    const R &zero) {
  const int size = m + n;
  Matrix<R> s(static_cast<std::size_t>(size), std::vector<R>(static_cast<std::size_t>(size), zero));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k)
      s[row][row + (m - k)] = a[k];
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k)
      s[n + row][row + (n - k)] = b[k];
  return s;
}

template <class R> std::vector<R> padded(std::vector<R> c, int deg, const R &zero) {
  c.resize(static_cast<std::size_t>(deg) + 1, zero);
  return c;
}

} // namespace

QPoly Bivariate::at_t(const Rational &t) const {
  std::vector<Rational> c;
  c.reserve(by_s.size());
  for (const auto &p : by_s)
    c.push_back(p.eval(t));
  return QPoly(std::move(c));
}

Bivariate Bivariate::derivative_s() const {
  Bivariate d;
  d.formal_degree = std::max(formal_degree - 1, 0);
  for (std::size_t k = 1; k < by_s.size(); ++k)
    d.by_s.push_back(by_s[k] * Rational(static_cast<long>(k)));
  return d;
}

int Bivariate::degree_t() const {
  int d = -1;
  for (const auto &p : by_s)
    d = std::max(d, p.degree());
  return d;
}

bool Bivariate::is_zero() const {
  return std::all_of(by_s.begin(), by_s.end(), [](const QPoly &p) { return p.is_zero(); });
}

Rational resultant(const QPoly &a, const QPoly &b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("resultant of the zero polynomial");
  const int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0)
    return Rational(1);
  const Rational zero(0);
  return determinant(sylvester(a.coeffs(), m, b.coeffs(), n, zero));
}

QPoly resultant_in_s(const Bivariate &a, int deg_a, const Bivariate &b, int deg_b) {
  if (deg_a == 0 && deg_b == 0)
    return QPoly::constant(Rational(1));
  const QPoly zero;
  auto s = sylvester(padded(a.by_s, deg_a, zero), deg_a, padded(b.by_s, deg_b, zero), deg_b,
                     zero);
  return bareiss_determinant<QPolyRing>(std::move(s));
}

Discriminant discriminant_in_s(const Bivariate &g) {
  const int e = g.formal_degree;
  Discriminant out;
  if (e <= 1) {
    out.disc = QPoly::constant(Rational(1));
    out.squarefree = out.disc;
    return out;
  }
  const QPoly lc = g.coeff(e);
  if (lc.is_zero())
    throw GeometryError("fibre family has a vanishing top coefficient");
  QPoly res = resultant_in_s(g, e, g.derivative_s(), e - 1);
  QPoly disc = exact_divide(res, lc);
  if ((e * (e - 1) / 2) % 2 == 1)
    disc = -disc;
  if (disc.is_zero())
    throw GeometryError("discriminant vanishes identically: fibre family is not reduced");
  out.squarefree = squarefree_part(disc);
  out.disc = std::move(disc);
  return out;
}

} // namespace monoproj
