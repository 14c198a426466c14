#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monoproj/rational.hpp"

namespace monoproj {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// Trailing zeros are stripped, so the leading coefficient is nonzero unless
/// the polynomial is zero (degree -1).
template <class T> class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(const T &v) { return UniPoly(std::vector<T>{v}); }
  static UniPoly monomial(const T &v, int deg) {
    std::vector<T> c(static_cast<std::size_t>(deg) + 1, T(0));
    c.back() = v;
    return UniPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T> &coeffs() const { return c_; }
  T coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0);
  }
  const T &lead() const {
    if (c_.empty())
      throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  template <class U> U eval(const U &x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + U(*it);
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1)
      return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d[i - 1] = c_[i] * T(static_cast<long>(i));
    return UniPoly(std::move(d));
  }

  UniPoly &operator+=(const UniPoly &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly &operator-=(const UniPoly &o) {
    if (o.c_.size() > c_.size())
      c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly &operator*=(const T &s) {
    for (auto &x : c_)
      x *= s;
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly &b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly &b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) {
    for (auto &x : a.c_)
      x = -x;
    return a;
  }
  friend UniPoly operator*(UniPoly a, const T &s) { return a *= s; }
  friend UniPoly operator*(const T &s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly &a, const UniPoly &b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  UniPoly &operator*=(const UniPoly &o) { return *this = *this * o; }

  friend bool operator==(const UniPoly &a, const UniPoly &b) {
    return a.c_ == b.c_;
  }

  /// Euclidean division over a field: *this = q*d + r, deg r < deg d.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly &d) const {
    if (d.is_zero())
      throw std::domain_error("polynomial division by zero");
    std::vector<T> r = c_;
    const int dd = d.degree();
    if (degree() < dd)
      return {UniPoly{}, *this};
    std::vector<T> q(static_cast<std::size_t>(degree() - dd) + 1, T(0));
    const T inv = T(1) / d.lead();
    for (int k = degree(); k >= dd; --k) {
      const T f = r[k] * inv;
      q[k - dd] = f;
      if (f == T(0))
        continue;
      for (int j = 0; j <= dd; ++j)
        r[k - dd + j] -= f * d.c_[j];
    }
    r.resize(static_cast<std::size_t>(dd));
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
  }

  UniPoly monic() const {
    if (is_zero())
      return *this;
    return *this * (T(1) / lead());
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0))
      c_.pop_back();
  }

  std::vector<T> c_;
};

using QPoly = UniPoly<Rational>;
using CPoly = UniPoly<Complex>;

/// Monic gcd over Q; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);

/// Exact quotient; throws if the division leaves a remainder.
QPoly exact_divide(const QPoly &a, const QPoly &b);

/// Yun decomposition: g = lc * prod_k factors[k-1]^k with each factor monic and
/// square-free, pairwise coprime. factors.size() is the top multiplicity.
std::vector<QPoly> squarefree_decomposition(const QPoly &g);

QPoly squarefree_part(const QPoly &g);

/// Root multiplicities of g over C, sorted descending; sums to deg g.
std::vector<int> squarefree_multiplicity_profile(const QPoly &g);

CPoly to_complex(const QPoly &p);

/// "3/2*s^2-s+1" style, highest degree first.
std::string to_string(const QPoly &p, const std::string &var = "s");

} // namespace monoproj
