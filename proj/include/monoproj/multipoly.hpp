#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "monoproj/rational.hpp"
#include "monoproj/unipoly.hpp"

namespace monoproj {

using Exponent = std::vector<int>;

/// Graded-lex descending: higher total degree first, ties broken by
/// lexicographically larger exponent first (x > y > z ...).
struct GrlexDesc {
  bool operator()(const Exponent &a, const Exponent &b) const;
};

/// Sparse multivariate polynomial over Q in 1..6 variables. No zero
/// coefficients are stored.
class MultiPoly {
public:
  using TermMap = std::map<Exponent, Rational, GrlexDesc>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational &c);
  static MultiPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  const TermMap &terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  /// Largest absolute coefficient, as a double.
  double coeff_norm() const;

  void add_term(const Exponent &e, const Rational &c);
  Rational coeff(const Exponent &e) const;

  MultiPoly &operator+=(const MultiPoly &o);
  MultiPoly &operator-=(const MultiPoly &o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly &a);
  friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
  friend MultiPoly operator*(MultiPoly a, const Rational &s);
  friend bool operator==(const MultiPoly &a, const MultiPoly &b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(int k) const;
  MultiPoly partial(int var) const;
  /// Homogeneous part of total degree k.
  MultiPoly homogeneous_part(int k) const;
  /// Smallest degree carrying a nonzero term; -1 for zero.
  int min_degree() const;

  /// Evaluates f at x in any commutative ring R that can be built from a
  /// Rational via `lift`.
  template <class R>
  R evaluate(const std::vector<R> &x,
             const std::function<R(const Rational &)> &lift) const;

  Rational eval(const std::vector<Rational> &x) const;
  Complex eval(const std::vector<Complex> &x) const;

  /// Substitutes variable i by images[i]; images share a common nvars.
  MultiPoly substitute(const std::vector<MultiPoly> &images) const;

  /// Canonical text: terms in graded-lex order, e.g. "x^2+y^2-z^2".
  std::string to_string(const std::vector<std::string> &names) const;

private:
  int nvars_ = 0;
  TermMap terms_;
};

/// Homogeneous coordinates; never the zero vector. Equality is projective.
class ProjectivePoint {
public:
  ProjectivePoint() = default;
  explicit ProjectivePoint(std::vector<Rational> coords);

  std::size_t size() const { return x_.size(); }
  const Rational &operator[](std::size_t i) const { return x_[i]; }
  const std::vector<Rational> &coords() const { return x_; }
  std::vector<Complex> to_complex() const;

  /// Scaled so the last nonzero coordinate equals 1.
  ProjectivePoint normalized() const;

  friend bool operator==(const ProjectivePoint &a, const ProjectivePoint &b);
  std::string to_string() const;

private:
  std::vector<Rational> x_;
};

/// Standard variable names for v variables: x,y,z,w,v,u.
std::vector<std::string> default_var_names(int nvars);

template <class R>
R MultiPoly::evaluate(const std::vector<R> &x,
                      const std::function<R(const Rational &)> &lift) const {
  // Power tables per variable up to the max exponent used.
  std::vector<std::vector<R>> powers(static_cast<std::size_t>(nvars_));
  for (const auto &[e, c] : terms_)
    for (int i = 0; i < nvars_; ++i) {
      auto &p = powers[i];
      if (p.empty())
        p.push_back(lift(Rational(1)));
      while (static_cast<int>(p.size()) <= e[i])
        p.push_back(p.back() * x[i]);
    }
  R acc = lift(Rational(0));
  for (const auto &[e, c] : terms_) {
    R term = lift(c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0)
        term = term * powers[i][e[i]];
    acc = acc + term;
  }
  return acc;
}

} // namespace monoproj
