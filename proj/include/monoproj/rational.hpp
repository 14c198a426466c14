#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace monoproj {

/// Exact scalar. mpq_class keeps gcd(num, den) = 1 and den > 0 after every
/// arithmetic operation; parse_rational canonicalizes literals.
using Rational = mpq_class;

/// Numeric scalar used by the double-precision tracker.
using Complex = std::complex<double>;

/// num/den in lowest terms (mpq_class's two-argument constructor does not
/// reduce).
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text);
std::string to_string(const Rational &q);

inline double to_double(const Rational &q) { return q.get_d(); }

/// Best rational approximation of x with denominator <= max_den
/// (continued fractions). Used to recognize rational branch values.
Rational rationalize(double x, std::int64_t max_den);

/// Reads "1,0,0" or "1/2,3,-1".
std::vector<Rational> parse_rational_list(std::string_view text);

} // namespace monoproj
