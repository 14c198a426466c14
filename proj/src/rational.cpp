#include "monoproj/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "monoproj/errors.hpp"

namespace monoproj {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+')
    throw ParseError("invalid rational literal '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+')
    n.erase(0, 1);
  mpz_class p(n, 10), q(std::string(den), 10);
  if (q == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational &q) { return q.get_str(); }

Rational rationalize(double x, std::int64_t max_den) {
  if (!std::isfinite(x))
    return Rational(0);
  const bool neg = x < 0;
  double y = std::fabs(x);
  // Convergents h/k of the continued fraction of y.
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(y);
    if (a > 1e15)
      break;
    mpz_class ai(static_cast<long>(a));
    mpz_class h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den)
      break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = y - a;
    if (frac < 1e-15)
      break;
    y = 1.0 / frac;
  }
  if (k1 == 0)
    return Rational(0);
  Rational r(neg ? mpz_class(-h1) : h1, k1);
  r.canonicalize();
  return r;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

} // namespace monoproj
