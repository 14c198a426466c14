#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monoproj {

// Each error family maps to one CLI exit code (2, 3, 4).

/// Malformed polynomial or point text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string &what) : std::runtime_error(what) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_ = 0;
};

/// Input that violates a geometric precondition: singular center, line on X,
/// reducible or non-reduced hypersurface, degenerate span.
class GeometryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Numerical breakdown that re-seeding could not repair.
class DegeneracyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A per-point time budget ran out. Not a property of the input, so it is
/// never retried.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace monoproj
