#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monoproj/group.hpp"
#include "monoproj/projection.hpp"
#include "monoproj/track.hpp"

namespace monoproj {

enum class Verdict { uniform, non_uniform };

std::string to_string(Verdict v);

struct MonodromyOptions {
  std::uint64_t seed = 0;
  TrackOptions track;
  unsigned threads = 1;
  /// Fresh frames tried after a path failure or a branch-point collision.
  int max_reseeds = 3;
  /// Branch points closer than this (relative) force a new frame.
  double collision_tol = 1e-9;
};

struct BranchPoint {
  PencilParameter parameter;
  /// Covering fibre multiplicities, descending.
  std::vector<int> partition;
  /// The fibre passes through a singular point of X.
  bool singular_fibre = false;
  Permutation generator;
  std::vector<int> cycle_type;
  double loop_radius = 0.0;
  /// arg((b - t0) / -t0), the loop-order key.
  double angle = 0.0;
};

/// Roots of the square-free discriminant with their fibre partitions.
std::vector<BranchPoint> branch_points(const ProjectionSetup &setup, double cluster_tol = 1e-6,
                                       unsigned threads = 1);

struct MonodromyResult {
  ProjectionSetup setup;
  /// In loop order: the product of the generators in this order is the
  /// identity.
  std::vector<BranchPoint> branch_points;
  Complex base_point;
  std::vector<Complex> base_fibre;
  GeneratedGroup group{1, {}};
  Classification classification;
  Verdict verdict = Verdict::uniform;
  bool galois = false;
  /// e <= 2: every transitive group is regular and symmetric at once.
  bool degenerate_galois = false;
  std::optional<BlockSystem> decomposable_witness;
  bool product_is_identity = true;
  /// Largest relative distance between a loop's end roots and the start
  /// roots they are matched to.
  double max_closure_error = 0.0;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
  int reseeds = 0;

  int covering_degree() const { return setup.covering_degree; }
  std::vector<Permutation> generators() const;
};

/// Monodromy of the projection of a plane curve from P. Frames are re-drawn
/// up to opts.max_reseeds times on numerical failure; an intransitive group
/// rejects the input as reducible (GeometryError).
MonodromyResult monodromy_group(const Hypersurface &x, const ProjectivePoint &p,
                                const MonodromyOptions &opts = {});

/// Single attempt on a prepared setup; numerical failures propagate.
MonodromyResult monodromy_group(const ProjectionSetup &setup, const MonodromyOptions &opts = {});

/// Every branch point whose fibre avoids X^sing has a generator with cycle
/// type equal to its fibre partition.
bool verify_cycle_structure(const MonodromyResult &result);

struct SectionTrial {
  ProjectivePoint p1, p2;  ///< the plane is spanned by P, p1, p2
  /// "uniform", "non_uniform", "reducible", "singular_centre" or "degenerate"
  std::string outcome;
  std::string message;
  std::optional<MonodromyResult> result;
};

/// Monodromy of a hypersurface of dimension >= 2 through plane sections.
/// The section group is a subgroup of the full group, so a uniform section
/// settles the verdict; non-uniform verdicts are Monte Carlo, backed by the
/// number of agreeing sections.
struct SectionResult {
  ProjectivePoint center;
  CenterKind kind = CenterKind::outer;
  int covering_degree = 0;
  std::vector<SectionTrial> trials;
  std::size_t deciding_trial = 0;
  Verdict verdict = Verdict::uniform;
  bool monte_carlo = false;
  int confidence = 0;

  const MonodromyResult &result() const { return *trials.at(deciding_trial).result; }
};

/// Throws GeometryError if P is singular or every sampled section is
/// reducible, DegeneracyError if no section could be analysed.
SectionResult section_monodromy(const Hypersurface &x, const ProjectivePoint &p, int trials,
                                const MonodromyOptions &opts = {});

} // namespace monoproj
