#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "monoproj/errors.hpp"
#include "monoproj/perm.hpp"
#include "monoproj/resultant.hpp"
#include "monoproj/unipoly.hpp"

namespace monoproj {

/// Numeric copy of a fibre family g(t, s) for fast evaluation.
class ComplexFamily {
public:
  ComplexFamily() = default;
  explicit ComplexFamily(const Bivariate &g);

  int degree_s() const { return static_cast<int>(by_s_.size()) - 1; }
  /// g(t, .) as a numeric polynomial in s.
  CPoly at(const Complex &t) const;
  /// Returns g(t, s) and dg/ds(t, s).
  std::pair<Complex, Complex> eval(const Complex &t, const Complex &s) const;
  /// sum_k |c_k(t)| |s|^k, the scale for backward errors.
  double weight(const Complex &t, const Complex &s) const;

private:
  std::vector<CPoly> by_s_;
};

/// A closed path in the t-plane made of straight segments and circular arcs.
class LoopPath {
public:
  struct Piece {
    enum class Kind { segment, arc } kind = Kind::segment;
    Complex from, to;        // segment endpoints
    Complex center;          // arc centre
    double radius = 0.0;     // arc radius
    double start_angle = 0.0;
    double sweep = 0.0;      // signed; 2*pi is one counterclockwise turn
  };

  void add_segment(const Complex &a, const Complex &b);
  void add_arc(const Complex &center, double radius, double start_angle, double sweep);
  /// Appends every piece of `other`.
  void append(const LoopPath &other);

  const std::vector<Piece> &pieces() const { return pieces_; }
  Complex point(std::size_t piece, double tau) const;
  Complex start() const { return point(0, 0.0); }
  Complex end() const { return point(pieces_.size() - 1, 1.0); }
  LoopPath reversed() const;

  /// Standard generator loop: segment from `base` towards `center`, stopping
  /// at distance `radius`, one counterclockwise turn, and back.
  static LoopPath around(const Complex &base, const Complex &center, double radius);

private:
  std::vector<Piece> pieces_;
};

struct TrackOptions {
  double newton_tol = 1e-12;   ///< relative Newton step size for convergence
  int max_newton = 3;          ///< more iterations than this halves the step
  double delta_min = 1e-6;     ///< minimum separation between trajectories (relative)
  double cluster_tol = 1e-6;   ///< endpoint matching tolerance (relative)
  double initial_step = 0.02;  ///< in path parameter units per piece
  double max_step = 0.05;
  double min_step = 1e-13;
  std::size_t max_steps = 200000;
  /// Throws BudgetExceeded once passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct TrackedPath {
  LoopPath path;
  std::vector<Complex> start;
  std::vector<Complex> end;
  /// samples[k] are the root positions after the k-th accepted step; t at
  /// sample k is sample_t[k].
  std::vector<Complex> sample_t;
  std::vector<std::vector<Complex>> samples;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  double min_separation = 0.0;
};

class PathFailure : public DegeneracyError {
public:
  using DegeneracyError::DegeneracyError;
};

/// Predictor-corrector continuation of every start root along `path`.
/// Zero-order predictor, Newton corrector; the step halves whenever Newton
/// needs more than `max_newton` iterations, two trajectories come within
/// delta_min, or a root moves further than a third of its distance to its
/// nearest neighbour. Throws PathFailure on step-size underflow.
TrackedPath track_roots(const ComplexFamily &family, const LoopPath &path,
                        const std::vector<Complex> &start, const TrackOptions &opts = {});

/// Matches end roots to start roots (nearest neighbour within the cluster
/// tolerance); the result maps start index i to the index of the start root
/// where trajectory i ends. Throws DegeneracyError on an ambiguous match.
Permutation loop_permutation(const TrackedPath &tracked, double cluster_tol = 1e-6);

} // namespace monoproj
