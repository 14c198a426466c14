#pragma once

#include <complex>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "monoproj/rational.hpp"
#include "monoproj/unipoly.hpp"

namespace monoproj::hp {

// 100 decimal digits. Fibre multiplicities at irrational branch values are
// read off root clusters computed at this precision: an m-fold root splits
// by roughly 10^(-100/m), far below the cluster tolerance.
using Real = boost::multiprecision::cpp_bin_float_100;
using Cplx = boost::multiprecision::cpp_complex_100;

Real to_real(const Rational &q);
Cplx to_cplx(const Complex &z);
Complex to_complex(const Cplx &z);

std::vector<Cplx> coeffs(const QPoly &p);

/// Newton-polishes a simple root of p starting from `guess`.
Cplx polish_simple_root(const QPoly &p, const Complex &guess);

} // namespace monoproj::hp
