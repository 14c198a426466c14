#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "monoproj/monodromy.hpp"

namespace monoproj {

/// "lo:hi:count": count equally spaced rationals from lo to hi.
struct GridSpec {
  Rational lo = -1;
  Rational hi = 1;
  int count = 21;

  std::vector<Rational> values() const;
};

/// Throws ParseError.
GridSpec parse_grid(const std::string &text);

enum class PointFilter { outer, inner, both };

std::string to_string(PointFilter f);

/// Points are taken in the chart where the last coordinate is 1.
struct ScanRegion {
  /// Same range for every affine coordinate.
  std::optional<GridSpec> grid;
  /// Seeded random rational points off X.
  int random_samples = 0;
  /// Seeded smooth rational points of X.
  int inner_samples = 0;
  std::vector<ProjectivePoint> extra_points;
  PointFilter filter = PointFilter::both;
};

struct ScanOptions {
  MonodromyOptions monodromy;
  /// Share of prefilter-rejected points re-checked by a full monodromy run.
  double cross_check_fraction = 0.05;
  /// Per-point cap in seconds; 0 disables it.
  double time_cap = 5.0;
  int section_trials = 5;
  unsigned threads = 1;
};

struct PrefilterResult {
  bool pass = false;
  std::size_t v_size = 0;
};

/// Fewer than two lines of V_P through P forces M(pi_P) to be symmetric, so
/// P is rejected as uniform without a monodromy run.
PrefilterResult prefilter_point(const Hypersurface &x, const ProjectivePoint &p, std::uint64_t seed);

struct ScanRecord {
  ProjectivePoint point;
  CenterKind kind = CenterKind::outer;
  int covering_degree = 0;
  /// "uniform", "non_uniform", "undecided", "excluded" (singular point) or
  /// "error".
  std::string status;
  /// "prefilter", "monodromy" or "section".
  std::string method;
  std::optional<std::size_t> v_size;
  std::optional<mpz_class> order;
  std::optional<GroupClass> group_class;
  bool galois = false;
  bool degenerate_galois = false;
  bool monte_carlo = false;
  bool cross_checked = false;
  std::optional<Verdict> cross_check_verdict;
  std::string message;
};

struct ScanSummary {
  std::size_t points = 0;
  std::size_t candidates = 0;  ///< passed the prefilter
  std::size_t non_uniform = 0;
  std::size_t galois = 0;
  std::size_t undecided = 0;
  std::size_t errors = 0;
  std::size_t excluded = 0;
  std::size_t cross_checked = 0;
  std::size_t soundness_violations = 0;
  std::size_t inner_requested = 0;
  std::size_t inner_found = 0;
};

struct ScanReport {
  std::vector<ScanRecord> records;  ///< sorted by normalized coordinates
  ScanSummary summary;
};

/// Smooth rational points of X found on seeded rational lines through
/// small-height points of X.
std::vector<ProjectivePoint> sample_inner_points(const Hypersurface &x, int count,
                                                 std::uint64_t seed);

/// Per-point failures are recorded, never thrown.
ScanReport scan_region(const Hypersurface &x, const ScanRegion &region, const ScanOptions &opts);

/// Records of the scan with a regular monodromy action.
std::vector<ScanRecord> galois_search(const Hypersurface &x, const ScanRegion &region,
                                      const ScanOptions &opts);

} // namespace monoproj
