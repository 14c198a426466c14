#include "monoproj/multipoly.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "monoproj/errors.hpp"

namespace monoproj {

namespace {

int total(const Exponent &e) { return std::accumulate(e.begin(), e.end(), 0); }

} // namespace

bool GrlexDesc::operator()(const Exponent &a, const Exponent &b) const {
  const int ta = total(a), tb = total(b);
  if (ta != tb)
    return ta > tb;
  return a > b;
}

MultiPoly MultiPoly::constant(int nvars, const Rational &c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  MultiPoly p(nvars);
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

int MultiPoly::degree() const {
  return terms_.empty() ? -1 : total(terms_.begin()->first);
}

int MultiPoly::min_degree() const {
  return terms_.empty() ? -1 : total(terms_.rbegin()->first);
}

bool MultiPoly::is_homogeneous() const {
  return terms_.empty() || degree() == min_degree();
}

double MultiPoly::coeff_norm() const {
  double m = 0.0;
  for (const auto &[e, c] : terms_)
    m = std::max(m, std::fabs(c.get_d()));
  return m;
}

void MultiPoly::add_term(const Exponent &e, const Rational &c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("exponent length does not match variable count");
  if (c == 0)
    return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(e, v);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Rational MultiPoly::coeff(const Exponent &e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
  if (nvars_ == 0)
    nvars_ = o.nvars_;
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) {
  if (nvars_ == 0)
    nvars_ = o.nvars_;
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

MultiPoly operator-(const MultiPoly &a) {
  MultiPoly r(a.nvars_);
  for (const auto &[e, c] : a.terms_)
    r.terms_.emplace(e, -c);
  return r;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
  MultiPoly r(std::max(a.nvars_, b.nvars_));
  Exponent e(static_cast<std::size_t>(r.nvars_));
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_) {
      for (int i = 0; i < r.nvars_; ++i)
        e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly operator*(MultiPoly a, const Rational &s) {
  if (s == 0)
    return MultiPoly(a.nvars_);
  for (auto &[e, c] : a.terms_)
    c *= s;
  return a;
}

MultiPoly MultiPoly::pow(int k) const {
  MultiPoly result = constant(nvars_, Rational(1));
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1)
      result = result * base;
    k >>= 1;
    if (k)
      base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::partial(int var) const {
  MultiPoly r(nvars_);
  for (const auto &[e, c] : terms_) {
    if (e[var] == 0)
      continue;
    Exponent d = e;
    --d[var];
    r.add_term(d, c * e[var]);
  }
  return r;
}

MultiPoly MultiPoly::homogeneous_part(int k) const {
  MultiPoly r(nvars_);
  for (const auto &[e, c] : terms_)
    if (total(e) == k)
      r.terms_.emplace(e, c);
  return r;
}

Rational MultiPoly::eval(const std::vector<Rational> &x) const {
  return evaluate<Rational>(x, [](const Rational &q) { return q; });
}

Complex MultiPoly::eval(const std::vector<Complex> &x) const {
  return evaluate<Complex>(x, [](const Rational &q) { return Complex(q.get_d(), 0.0); });
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly> &images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("substitute: wrong number of images");
  const int target = images.empty() ? 0 : images.front().nvars();
  return evaluate<MultiPoly>(images, [target](const Rational &q) {
    return MultiPoly::constant(target, q);
  });
}

std::string MultiPoly::to_string(const std::vector<std::string> &names) const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c0] : terms_) {
    Rational c = c0;
    const bool neg = c < 0;
    if (neg) {
      c = -c;
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    bool wrote = false;
    if (c != 1 || total(e) == 0) {
      os << c.get_str();
      wrote = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0)
        continue;
      if (wrote)
        os << '*';
      os << names[i];
      if (e[i] > 1)
        os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

ProjectivePoint::ProjectivePoint(std::vector<Rational> coords) : x_(std::move(coords)) {
  bool all_zero = true;
  for (const auto &c : x_)
    all_zero = all_zero && c == 0;
  if (x_.empty() || all_zero)
    throw GeometryError("projective point cannot be the zero vector");
}

std::vector<Complex> ProjectivePoint::to_complex() const {
  std::vector<Complex> out;
  for (const auto &c : x_)
    out.emplace_back(c.get_d(), 0.0);
  return out;
}

ProjectivePoint ProjectivePoint::normalized() const {
  std::size_t k = x_.size();
  while (k-- > 0)
    if (x_[k] != 0)
      break;
  std::vector<Rational> y = x_;
  const Rational s = x_[k];
  for (auto &c : y)
    c /= s;
  return ProjectivePoint(std::move(y));
}

bool operator==(const ProjectivePoint &a, const ProjectivePoint &b) {
  if (a.size() != b.size())
    return false;
  // a ~ b iff all 2x2 minors vanish.
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i])
        return false;
  return true;
}

std::string ProjectivePoint::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (i)
      s += ',';
    s += x_[i].get_str();
  }
  return s;
}

std::vector<std::string> default_var_names(int nvars) {
  static const char *names[] = {"x", "y", "z", "w", "v", "u"};
  if (nvars < 1 || nvars > 6)
    throw std::invalid_argument("variable count must be in 1..6");
  return {names, names + nvars};
}

} // namespace monoproj
