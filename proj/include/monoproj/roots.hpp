#pragma once

#include <string>
#include <vector>

#include "monoproj/errors.hpp"
#include "monoproj/hp.hpp"
#include "monoproj/unipoly.hpp"

namespace monoproj {

struct RootCluster {
  Complex value;
  int multiplicity = 1;
};

/// All complex roots of a polynomial, clustered by multiplicity.
struct RootSet {
  std::vector<RootCluster> roots;
  /// Largest backward error |g(r)| / (max_k |c_k| * sum_k |r|^k) over simple
  /// roots.
  double residual = 0.0;
  double cluster_tol = 0.0;

  int total_multiplicity() const;
  std::vector<Complex> values() const;
  std::vector<int> multiplicities() const;
};

class RootFindingError : public DegeneracyError {
public:
  RootFindingError(const std::string &what, double worst_residual)
      : DegeneracyError(what), worst_residual_(worst_residual) {}
  double worst_residual() const { return worst_residual_; }

private:
  double worst_residual_;
};

/// Aberth-Ehrlich simultaneous iteration followed by clustering: roots
/// within cluster_tol * max(1, |r|) of each other merge into one cluster.
/// Throws RootFindingError when the iteration does not converge.
RootSet all_roots(const CPoly &g, double tol = 1e-12, double cluster_tol = 1e-6);

/// Same on a high-precision coefficient list (lowest degree first, nonzero
/// leading coefficient).
struct HpRootCluster {
  hp::Cplx value;
  int multiplicity = 1;
};
std::vector<HpRootCluster> all_roots_hp(const std::vector<hp::Cplx> &coeffs,
                                        double cluster_tol = 1e-6);

/// Roots of an exact polynomial, Newton-polished at 100 digits; exact
/// multiplicities come from the square-free decomposition.
std::vector<HpRootCluster> exact_roots(const QPoly &g);

} // namespace monoproj
