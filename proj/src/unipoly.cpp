#include "monoproj/unipoly.hpp"

#include <sstream>

namespace monoproj {

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPoly exact_divide(const QPoly &a, const QPoly &b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero())
    throw std::logic_error("inexact polynomial division");
  return q;
}

std::vector<QPoly> squarefree_decomposition(const QPoly &g) {
  std::vector<QPoly> out;
  if (g.degree() < 1)
    return out;
  const QPoly f = g.monic();
  const QPoly fp = f.derivative();
  QPoly a = gcd(f, fp);
  QPoly b = exact_divide(f, a);
  QPoly c = exact_divide(fp, a);
  QPoly d = c - b.derivative();
  while (b.degree() > 0) {
    QPoly ai = gcd(b, d);
    out.push_back(ai);
    b = exact_divide(b, ai);
    c = exact_divide(d, ai);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0)
    out.pop_back();
  return out;
}

QPoly squarefree_part(const QPoly &g) {
  if (g.degree() < 1)
    return g.is_zero() ? g : QPoly::constant(Rational(1));
  return exact_divide(g.monic(), gcd(g, g.derivative()));
}

std::vector<int> squarefree_multiplicity_profile(const QPoly &g) {
  std::vector<int> parts;
  const auto factors = squarefree_decomposition(g);
  for (std::size_t k = factors.size(); k-- > 0;)
    for (int i = 0; i < factors[k].degree(); ++i)
      parts.push_back(static_cast<int>(k) + 1);
  return parts;
}

CPoly to_complex(const QPoly &p) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto &q : p.coeffs())
    c.emplace_back(q.get_d(), 0.0);
  return CPoly(std::move(c));
}

std::string to_string(const QPoly &p, const std::string &var) {
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0)
      continue;
    const bool neg = c < 0;
    if (neg)
      c = -c;
    if (neg)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    const bool unit = c == 1;
    if (!unit || k == 0)
      os << c.get_str();
    if (k > 0) {
      if (!unit)
        os << '*';
      os << var;
      if (k > 1)
        os << '^' << k;
    }
  }
  return os.str();
}

} // namespace monoproj
