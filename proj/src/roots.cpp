#include "monoproj/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

namespace monoproj {

namespace {

using std::abs;

constexpr double machine_eps = std::numeric_limits<double>::epsilon();

template <class C> C horner(const std::vector<C> &c, const C &z) {
  C acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

template <class C> std::vector<C> derive(const std::vector<C> &c) {
  std::vector<C> d;
  for (std::size_t k = 1; k < c.size(); ++k)
    d.push_back(c[k] * C(static_cast<double>(k)));
  return d;
}

/// Aberth-Ehrlich in Gauss-Seidel form. `z` holds the starting points and
/// receives the roots. A root is done once its correction is below
/// step_tol * (1 + |z|) or its backward error is below backward_tol (roots
/// of a cluster stall at the attainable accuracy). Returns true when all
/// roots are done.
template <class C, class R>
bool aberth(const std::vector<C> &c, std::vector<C> &z, const R &step_tol,
            const R &backward_tol, int max_iter) {
  const std::vector<C> dc = derive(c);
  std::vector<R> abs_c;
  for (const auto &x : c)
    abs_c.push_back(R(abs(x)));
  auto backward_ok = [&](const C &p, const C &zi) {
    R weight(0), zk(1);
    const R az = R(abs(zi));
    for (const auto &a : abs_c) {
      weight += a * zk;
      zk *= az;
    }
    return R(abs(p)) <= backward_tol * weight;
  };
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  for (int it = 0; it < max_iter; ++it) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i])
        continue;
      const C p = horner(c, z[i]);
      if (p == C(0) || (it > 0 && backward_ok(p, z[i]))) {
        done[i] = true;
        continue;
      }
      const C ratio = p / horner(dc, z[i]);
      C sum(0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && z[i] != z[j])
          sum += C(1) / (z[i] - z[j]);
      const C w = ratio / (C(1) - ratio * sum);
      z[i] -= w;
      if (abs(w) <= step_tol * (R(1) + abs(z[i])))
        done[i] = true;
      else
        all_done = false;
    }
    if (all_done)
      return true;
  }
  return false;
}

std::vector<Complex> initial_points(const std::vector<Complex> &c) {
  const int e = static_cast<int>(c.size()) - 1;
  double radius = 0.0;
  for (int k = 0; k < e; ++k)
    radius = std::max(radius, std::pow(std::abs(c[k] / c[e]), 1.0 / (e - k)));
  radius = std::max(radius, 1e-3);
  std::vector<Complex> z;
  for (int i = 0; i < e; ++i)
    z.push_back(std::polar(radius, 0.7 + 2.0 * M_PI * i / e));
  return z;
}

/// Union-find clustering; the cluster value is the centroid, which is
/// accurate to first order even when the members are not.
template <class C, class R>
std::vector<std::pair<C, int>> cluster(const std::vector<C> &z, double tol) {
  const std::size_t n = z.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const R scale = std::max(R(1), R(abs(z[i])));
      if (abs(z[i] - z[j]) <= R(tol) * scale)
        parent[find(j)] = find(i);
    }
  std::vector<std::pair<C, int>> out;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(out.size());
      out.emplace_back(C(0), 0);
    }
    out[slot[r]].first += z[i];
    out[slot[r]].second += 1;
  }
  for (auto &[v, m] : out)
    v /= C(static_cast<double>(m));
  return out;
}

/// Aberth converges only linearly on a cluster. Instead, group the double
/// precision roots loosely (an m-fold root is only resolved to about
/// eps^(1/m) there) and Newton-polish each group of size m on the (m-1)-th
/// derivative, where the multiple root is simple. Accepted only when every
/// lower derivative vanishes at the polished point and the groups stay
/// apart; otherwise the caller falls back to Aberth.
std::optional<std::vector<HpRootCluster>> polish_groups(const std::vector<hp::Cplx> &coeffs,
                                                        const std::vector<Complex> &z0,
                                                        double cluster_tol) {
  const auto groups = cluster<Complex, double>(z0, 2e-3);
  std::vector<std::vector<hp::Cplx>> derivs{coeffs};
  while (derivs.back().size() > 1)
    derivs.push_back(derive(derivs.back()));
  const hp::Real step_tol("1e-90"), vanish_tol("1e-60");
  auto weight = [](const std::vector<hp::Cplx> &c, const hp::Real &az) {
    hp::Real w(0), zk(1);
    for (const auto &x : c) {
      w += abs(x) * zk;
      zk *= az;
    }
    return w;
  };
  std::vector<HpRootCluster> out;
  for (const auto &[v, m] : groups) {
    const auto &p = derivs[static_cast<std::size_t>(m - 1)];
    const auto &dp = derivs[static_cast<std::size_t>(m)];
    hp::Cplx z = hp::to_cplx(v);
    bool converged = false;
    for (int it = 0; it < 60 && !converged; ++it) {
      const hp::Cplx d = horner(dp, z);
      if (d == hp::Cplx(0))
        return std::nullopt;
      const hp::Cplx step = horner(p, z) / d;
      z -= step;
      converged = abs(step) <= step_tol * (1 + abs(z));
    }
    if (!converged || abs(hp::to_complex(z) - v) > 1e-2 * std::max(1.0, std::abs(v)))
      return std::nullopt;
    const hp::Real az = abs(z);
    for (int j = 0; j < m; ++j)
      if (abs(horner(derivs[static_cast<std::size_t>(j)], z)) >
          vanish_tol * weight(derivs[static_cast<std::size_t>(j)], az))
        return std::nullopt;
    out.push_back({z, m});
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      const double a = std::abs(hp::to_complex(out[i].value - out[j].value));
      if (a <= cluster_tol * std::max(1.0, std::abs(hp::to_complex(out[i].value))))
        return std::nullopt;
    }
  return out;
}

} // namespace

int RootSet::total_multiplicity() const {
  int s = 0;
  for (const auto &r : roots)
    s += r.multiplicity;
  return s;
}

std::vector<Complex> RootSet::values() const {
  std::vector<Complex> v;
  for (const auto &r : roots)
    v.push_back(r.value);
  return v;
}

std::vector<int> RootSet::multiplicities() const {
  std::vector<int> m;
  for (const auto &r : roots)
    m.push_back(r.multiplicity);
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

RootSet all_roots(const CPoly &g, double tol, double cluster_tol) {
  if (g.degree() < 1)
    throw std::invalid_argument("all_roots needs degree >= 1");
  const auto &c = g.coeffs();
  double norm = 0.0;
  for (const auto &x : c)
    norm = std::max(norm, std::abs(x));
  if (std::abs(c.back()) < 1e-14 * norm)
    throw RootFindingError("leading coefficient is negligible", 0.0);

  std::vector<Complex> z = initial_points(c);
  const bool converged = aberth(c, z, 1e-15, 4 * machine_eps, 500);

  RootSet out;
  out.cluster_tol = cluster_tol;
  for (const auto &[v, m] : cluster<Complex, double>(z, cluster_tol))
    out.roots.push_back({v, m});
  // Normwise backward error.
  auto backward_error = [&](const Complex &r) {
    double weight = 0.0, rk = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      weight += norm * rk;
      rk *= std::abs(r);
    }
    return std::abs(horner(c, r)) / weight;
  };
  for (const auto &r : out.roots)
    if (r.multiplicity == 1)
      out.residual = std::max(out.residual, backward_error(r.value));
  if (!converged && out.residual > tol)
    throw RootFindingError("Aberth iteration did not converge", out.residual);
  if (out.residual > tol)
    throw RootFindingError("root residual above tolerance", out.residual);
  return out;
}

std::vector<HpRootCluster> all_roots_hp(const std::vector<hp::Cplx> &coeffs,
                                        double cluster_tol) {
  const int e = static_cast<int>(coeffs.size()) - 1;
  if (e < 1)
    throw std::invalid_argument("all_roots_hp needs degree >= 1");
  std::vector<Complex> lo;
  for (const auto &x : coeffs)
    lo.push_back(hp::to_complex(x));
  std::vector<Complex> z0 = initial_points(lo);
  aberth(lo, z0, 1e-15, 4 * machine_eps, 500);
  if (auto fast = polish_groups(coeffs, z0, cluster_tol))
    return *fast;
  std::vector<hp::Cplx> z;
  for (const auto &x : z0)
    z.push_back(hp::to_cplx(x));
  if (!aberth(coeffs, z, hp::Real("1e-85"), hp::Real("1e-95"), 2000))
    throw RootFindingError("high-precision Aberth iteration did not converge", 0.0);
  std::vector<HpRootCluster> out;
  for (const auto &[v, m] : cluster<hp::Cplx, hp::Real>(z, cluster_tol))
    out.push_back({v, m});
  return out;
}

std::vector<HpRootCluster> exact_roots(const QPoly &g) {
  std::vector<HpRootCluster> out;
  const auto factors = squarefree_decomposition(g);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const QPoly &a = factors[k];
    if (a.degree() < 1)
      continue;
    const RootSet rs = all_roots(to_complex(a), 1e-8, 1e-12);
    for (const auto &r : rs.roots)
      out.push_back({hp::polish_simple_root(a, r.value), static_cast<int>(k) + 1});
  }
  return out;
}

} // namespace monoproj
