#include "monoproj/hp.hpp"

namespace monoproj::hp {

Real to_real(const Rational &q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

Cplx to_cplx(const Complex &z) { return Cplx(Real(z.real()), Real(z.imag())); }

Complex to_complex(const Cplx &z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

std::vector<Cplx> coeffs(const QPoly &p) {
  std::vector<Cplx> c;
  c.reserve(p.coeffs().size());
  for (const auto &q : p.coeffs())
    c.emplace_back(to_real(q));
  return c;
}

Cplx polish_simple_root(const QPoly &p, const Complex &guess) {
  const auto c = coeffs(p);
  const auto dc = coeffs(p.derivative());
  auto horner = [](const std::vector<Cplx> &cs, const Cplx &z) {
    Cplx acc(0);
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
      acc = acc * z + *it;
    return acc;
  };
  Cplx z = to_cplx(guess);
  const Real eps = Real("1e-95");
  for (int it = 0; it < 100; ++it) {
    const Cplx step = horner(c, z) / horner(dc, z);
    z -= step;
    if (abs(step) <= eps * (1 + abs(z)))
      break;
  }
  return z;
}

} // namespace monoproj::hp
