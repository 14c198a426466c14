#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monoproj/multipoly.hpp"

namespace monoproj {

/// Parses a polynomial over Q.
///
/// Grammar: sums and differences of products of factors; a factor is a
/// signed integer or rational literal "p/q", a variable, or a parenthesized
/// expression, optionally raised to a non-negative integer power with '^'.
/// Multiplication must be written with '*'.
///
/// Variables are accepted by name (`names[i]`) or as x0..x5. Throws
/// ParseError with the byte offset of the offending token.
MultiPoly parse_poly(std::string_view text,
                     const std::vector<std::string> &names);

/// Uses default_var_names(nvars).
MultiPoly parse_poly(std::string_view text, int nvars);

/// Like parse_poly but also requires a homogeneous result of degree >= 1.
MultiPoly parse_hypersurface(std::string_view text, int nvars);

} // namespace monoproj
