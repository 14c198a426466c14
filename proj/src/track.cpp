#include "monoproj/track.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace monoproj {

ComplexFamily::ComplexFamily(const Bivariate &g) {
  for (int k = 0; k <= g.formal_degree; ++k)
    by_s_.push_back(to_complex(g.coeff(k)));
}

CPoly ComplexFamily::at(const Complex &t) const {
  std::vector<Complex> c;
  for (const auto &p : by_s_)
    c.push_back(p.eval(t));
  return CPoly(std::move(c));
}

std::pair<Complex, Complex> ComplexFamily::eval(const Complex &t, const Complex &s) const {
  Complex g = 0, gs = 0;
  for (std::size_t k = by_s_.size(); k-- > 0;) {
    gs = gs * s + g;
    g = g * s + by_s_[k].eval(t);
  }
  return {g, gs};
}

double ComplexFamily::weight(const Complex &t, const Complex &s) const {
  double w = 0.0, sk = 1.0;
  for (const auto &p : by_s_) {
    w += std::abs(p.eval(t)) * sk;
    sk *= std::abs(s);
  }
  return w;
}

void LoopPath::add_segment(const Complex &a, const Complex &b) {
  Piece p;
  p.kind = Piece::Kind::segment;
  p.from = a;
  p.to = b;
  pieces_.push_back(p);
}

void LoopPath::add_arc(const Complex &center, double radius, double start_angle,
                       double sweep) {
  Piece p;
  p.kind = Piece::Kind::arc;
  p.center = center;
  p.radius = radius;
  p.start_angle = start_angle;
  p.sweep = sweep;
  pieces_.push_back(p);
}

void LoopPath::append(const LoopPath &other) {
  pieces_.insert(pieces_.end(), other.pieces_.begin(), other.pieces_.end());
}

Complex LoopPath::point(std::size_t piece, double tau) const {
  const Piece &p = pieces_.at(piece);
  if (p.kind == Piece::Kind::segment)
    return tau >= 1.0 ? p.to : p.from + tau * (p.to - p.from);
  return p.center + std::polar(p.radius, p.start_angle + tau * p.sweep);
}

LoopPath LoopPath::reversed() const {
  LoopPath r;
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
    Piece p = *it;
    if (p.kind == Piece::Kind::segment) {
      std::swap(p.from, p.to);
    } else {
      p.start_angle += p.sweep;
      p.sweep = -p.sweep;
    }
    r.pieces_.push_back(p);
  }
  return r;
}

LoopPath LoopPath::around(const Complex &base, const Complex &center, double radius) {
  const Complex u = (center - base) / std::abs(center - base);
  const Complex entry = center - radius * u;
  LoopPath loop;
  loop.add_segment(base, entry);
  loop.add_arc(center, radius, std::arg(-u), 2.0 * M_PI);
  loop.add_segment(entry, base);
  return loop;
}

namespace {

constexpr double machine_eps = std::numeric_limits<double>::epsilon();

/// Newton from `s` at parameter t; true if it converged within max_iter.
bool correct(const ComplexFamily &family, const Complex &t, Complex &s, const TrackOptions &opts,
             int max_iter) {
  for (int it = 0; it < max_iter; ++it) {
    const auto [g, gs] = family.eval(t, s);
    if (gs == Complex(0))
      return false;
    const Complex delta = g / gs;
    s -= delta;
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
      return false;
    if (std::abs(delta) <= opts.newton_tol * std::max(1.0, std::abs(s)))
      return true;
    if (std::abs(family.eval(t, s).first) <= 8 * machine_eps * family.weight(t, s))
      return true;
  }
  return false;
}

double min_pairwise(const std::vector<Complex> &z) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j)
      m = std::min(m, std::abs(z[i] - z[j]));
  return m;
}

double scale_of(const std::vector<Complex> &z) {
  double m = 1.0;
  for (const auto &x : z)
    m = std::max(m, std::abs(x));
  return m;
}

} // namespace

TrackedPath track_roots(const ComplexFamily &family, const LoopPath &path,
                        const std::vector<Complex> &start, const TrackOptions &opts) {
  TrackedPath out;
  out.path = path;
  std::vector<Complex> roots = start;
  const Complex t0 = path.start();
  for (auto &s : roots)
    if (!correct(family, t0, s, opts, 50))
      throw PathFailure("start root does not converge at the base point");
  out.start = roots;
  out.min_separation = min_pairwise(roots);
  out.sample_t.push_back(t0);
  out.samples.push_back(roots);

  std::vector<Complex> trial(roots.size());
  std::size_t steps = 0;
  for (std::size_t piece = 0; piece < path.pieces().size(); ++piece) {
    double tau = 0.0, h = opts.initial_step;
    int streak = 0;
    while (tau < 1.0) {
      if (++steps > opts.max_steps)
        throw PathFailure("step budget exhausted");
      if (opts.deadline && steps % 256 == 0 && std::chrono::steady_clock::now() > *opts.deadline)
        throw BudgetExceeded("time budget exceeded while tracking");
      const double tau_next = std::min(1.0, tau + h);
      const Complex t = path.point(piece, tau_next);
      bool ok = true;
      for (std::size_t i = 0; i < roots.size() && ok; ++i) {
        trial[i] = roots[i];
        ok = correct(family, t, trial[i], opts, opts.max_newton);
      }
      if (ok) {
        const double scale = scale_of(trial);
        ok = roots.size() < 2 || min_pairwise(trial) >= opts.delta_min * scale;
        for (std::size_t i = 0; i < roots.size() && ok; ++i) {
          double nearest = std::numeric_limits<double>::infinity();
          for (std::size_t j = 0; j < roots.size(); ++j)
            if (j != i)
              nearest = std::min(nearest, std::abs(roots[i] - roots[j]));
          ok = std::abs(trial[i] - roots[i]) < nearest / 3.0;
        }
      }
      if (!ok) {
        ++out.rejected_steps;
        streak = 0;
        h /= 2.0;
        if (h < opts.min_step)
          throw PathFailure("step size underflow while tracking");
        continue;
      }
      roots = trial;
      tau = tau_next;
      ++out.accepted_steps;
      out.min_separation = std::min(out.min_separation, min_pairwise(roots));
      out.sample_t.push_back(t);
      out.samples.push_back(roots);
      if (++streak >= 3) {
        h = std::min(1.5 * h, opts.max_step);
        streak = 0;
      }
    }
  }
  const Complex t_end = path.end();
  for (auto &s : roots)
    correct(family, t_end, s, opts, 50);
  out.end = roots;
  return out;
}

Permutation loop_permutation(const TrackedPath &tracked, double cluster_tol) {
  const std::size_t n = tracked.start.size();
  if (tracked.end.size() != n)
    throw DegeneracyError("tracked path is not closed");
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = n;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      const double dist = std::abs(tracked.end[i] - tracked.start[j]);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    const double tol = cluster_tol * std::max(1.0, std::abs(tracked.start[best]));
    if (best == n || best_dist > tol)
      throw DegeneracyError("loop endpoint does not match any start root");
    if (used[best])
      throw DegeneracyError("ambiguous endpoint matching");
    used[best] = true;
    img[i] = static_cast<int>(best);
  }
  return Permutation(std::move(img));
}

} // namespace monoproj
