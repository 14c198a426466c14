#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace monoproj {

/// Bijection of {0..d-1}; p[i] is the image of i.
///
/// Products read left to right: (p * q)[i] = q[p[i]], i.e. apply p first.
/// This matches concatenation of loops: tracking loop a then loop b yields
/// perm(a) * perm(b).
class Permutation {
public:
  Permutation() = default;
  /// Identity on d points.
  explicit Permutation(int d);
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);

  /// Parses cycle notation with 1-based points, e.g. "(1 2)(3 4)"; "()" is
  /// the identity.
  static Permutation from_cycles(std::string_view text, int d);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<int> &images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_even() const;
  /// Cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const;
  /// Order as an element: lcm of the cycle lengths.
  unsigned long long order() const;

  /// 1-based cycle notation; the identity prints as "()".
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation &p, const Permutation &q);
  friend bool operator==(const Permutation &a, const Permutation &b) = default;
  friend bool operator<(const Permutation &a, const Permutation &b) {
    return a.img_ < b.img_;
  }

private:
  std::vector<int> img_;
};

/// Cycle lengths (fixed points included) sorted descending; sums to d.
std::vector<int> cycle_type(const Permutation &p);

} // namespace monoproj
