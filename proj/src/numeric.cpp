#include "paramsurf/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "paramsurf/errors.hpp"

namespace paramsurf {

void Tolerances::validate() const {
  if (!(newton_tol > 0)) throw InputError("newton_tol must be positive");
  if (!(match_margin >= 2)) throw InputError("match_margin must be at least 2");
  if (max_refine < 1) throw InputError("max_refine must be at least 1");
  if (initial_steps < 8) throw InputError("initial_steps must be at least 8");
}

double point_dist(std::span<const Cplx> a, std::span<const Cplx> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

namespace {

Cplx horner(std::span<const Cplx> coeffs, Cplx z) {
  Cplx v(0.0, 0.0);
  for (size_t k = coeffs.size(); k-- > 0;) v = v * z + coeffs[k];
  return v;
}

// Backward-error scale: sum |c_k| max(1,|z|)^k. A root with |p(z)| below
// tol * scale is an exact root of a relatively perturbed polynomial.
double residual_scale(std::span<const Cplx> coeffs, Cplx z) {
  const double m = std::max(1.0, std::abs(z));
  double s = 0.0;
  double mk = 1.0;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    s += std::abs(coeffs[k]) * mk;
    mk *= m;
  }
  return s;
}

}  // namespace

std::vector<RootCluster> roots_univ(std::span<const Cplx> coeffs, double tol) {
  if (!(tol > 0)) throw InputError("tolerance must be positive");
  const size_t deg = coeffs.empty() ? 0 : coeffs.size() - 1;
  if (deg == 0) throw InputError("roots_univ: degree zero polynomial");
  if (std::abs(coeffs.back()) == 0.0) throw InputError("roots_univ: zero leading coefficient");

  // Aberth-Ehrlich from staggered points on a Cauchy-bound circle.
  double cb = 0.0;
  for (size_t k = 0; k < deg; ++k) cb = std::max(cb, std::abs(coeffs[k] / coeffs.back()));
  const double radius = 0.5 * (1.0 + cb);
  const size_t n = deg;
  std::vector<Cplx> z(n);
  for (size_t j = 0; j < n; ++j) {
    const double ang = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n) + 0.41;
    z[j] = radius * Cplx(std::cos(ang), std::sin(ang));
  }

  std::vector<Cplx> dc(deg);
  for (size_t k = 1; k <= deg; ++k) dc[k - 1] = coeffs[k] * static_cast<double>(k);

  bool done = false;
  for (int iter = 0; iter < 400 && !done; ++iter) {
    double max_step = 0.0;
    for (size_t j = 0; j < n; ++j) {
      const Cplx pv = horner(coeffs, z[j]);
      if (std::abs(pv) <= 0.01 * tol * residual_scale(coeffs, z[j])) continue;
      Cplx dv = horner(dc, z[j]);
      if (std::abs(dv) == 0.0) dv = Cplx(1e-30, 0.0);
      const Cplx w = pv / dv;
      Cplx sum(0.0, 0.0);
      for (size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        Cplx d = z[j] - z[k];
        if (std::abs(d) < 1e-30) d = Cplx(1e-30, 0.0);
        sum += 1.0 / d;
      }
      const Cplx denom = 1.0 - w * sum;
      const Cplx step = std::abs(denom) < 1e-30 ? w : w / denom;
      z[j] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    done = true;
    for (size_t j = 0; j < n && done; ++j) {
      if (std::abs(horner(coeffs, z[j])) > tol * residual_scale(coeffs, z[j])) done = false;
    }
    if (!done && max_step < 1e-16 * std::max(1.0, radius)) break;  // stagnated
  }
  for (size_t j = 0; j < n; ++j) {
    if (std::abs(horner(coeffs, z[j])) > tol * residual_scale(coeffs, z[j]))
      throw NumericError("roots_univ: no convergence after iteration cap");
  }

  // Collapse near-coincident approximations into multiplicity clusters.
  // Each approximation carries a position-error estimate from the root
  // condition number tol*scale/|p'(z)|, capped by the worst-case spread
  // (tol*scale)^(1/deg) of a deg-fold root; approximations merge when their
  // separation is explained by those errors. Genuinely distinct roots keep
  // small |p'| -> small error and stay separate.
  std::sort(z.begin(), z.end(), [](Cplx a, Cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  std::vector<double> err(n);
  for (size_t j = 0; j < n; ++j) {
    const double scale = residual_scale(coeffs, z[j]);
    const double dv = std::abs(horner(dc, z[j]));
    const double cap = std::pow(tol * scale, 1.0 / static_cast<double>(deg));
    err[j] = std::min(tol * scale / std::max(dv, 1e-300), cap);
  }
  std::vector<std::vector<size_t>> clusters;
  std::vector<bool> used(n, false);
  for (size_t j = 0; j < n; ++j) {
    if (used[j]) continue;
    std::vector<size_t> c{j};
    used[j] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      Cplx centroid(0, 0);
      double cerr = 0.0;
      for (size_t v : c) {
        centroid += z[v];
        cerr = std::max(cerr, err[v]);
      }
      centroid /= static_cast<double>(c.size());
      for (size_t k = 0; k < n; ++k) {
        if (used[k]) continue;
        if (std::abs(z[k] - centroid) <= 8.0 * (cerr + err[k])) {
          c.push_back(k);
          used[k] = true;
          grew = true;
        }
      }
    }
    clusters.push_back(std::move(c));
  }

  std::vector<RootCluster> out;
  for (const auto& c : clusters) {
    Cplx centroid(0, 0);
    for (size_t v : c) centroid += z[v];
    centroid /= static_cast<double>(c.size());
    // Polish simple roots with a few Newton steps.
    Cplx r = centroid;
    if (c.size() == 1) {
      for (int it = 0; it < 4; ++it) {
        const Cplx pv = horner(coeffs, r);
        const Cplx dv = horner(dc, r);
        if (std::abs(dv) == 0.0) break;
        const Cplx next = r - pv / dv;
        if (std::abs(horner(coeffs, next)) < std::abs(pv)) r = next; else break;
      }
    }
    out.push_back({r, static_cast<int>(c.size()), std::abs(horner(coeffs, r))});
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

SquareSystem::SquareSystem(std::vector<MultiPoly> eqs, std::vector<std::string> vars)
    : eqs_(std::move(eqs)), vars_(std::move(vars)) {
  if (eqs_.size() != vars_.size()) throw InputError("system is not square");
  jac_.resize(eqs_.size());
  for (size_t i = 0; i < eqs_.size(); ++i) {
    if (eqs_[i].vars() != vars_) throw InputError("system equations use a different variable list");
    for (const auto& v : vars_) jac_[i].push_back(derivative(eqs_[i], v));
  }
}

void SquareSystem::eval(std::span<const Cplx> x, std::span<Cplx> f) const {
  for (size_t i = 0; i < eqs_.size(); ++i) f[i] = eval_complex(eqs_[i], x).value;
}

void SquareSystem::jacobian(std::span<const Cplx> x, std::span<Cplx> j) const {
  const size_t m = eqs_.size();
  for (size_t r = 0; r < m; ++r)
    for (size_t c = 0; c < m; ++c) j[r * m + c] = eval_complex(jac_[r][c], x).value;
}

namespace {

// Gaussian elimination with partial pivoting; returns the smallest pivot
// magnitude encountered. Solves in place: a is m x m row-major, b length m.
double solve_linear(std::vector<Cplx>& a, std::vector<Cplx>& b, size_t m) {
  double min_pivot = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < m; ++k) {
    size_t piv = k;
    for (size_t r = k + 1; r < m; ++r)
      if (std::abs(a[r * m + k]) > std::abs(a[piv * m + k])) piv = r;
    if (piv != k) {
      for (size_t c = 0; c < m; ++c) std::swap(a[k * m + c], a[piv * m + c]);
      std::swap(b[k], b[piv]);
    }
    const double pmag = std::abs(a[k * m + k]);
    min_pivot = std::min(min_pivot, pmag);
    if (pmag == 0.0) return 0.0;
    for (size_t r = k + 1; r < m; ++r) {
      const Cplx f = a[r * m + k] / a[k * m + k];
      for (size_t c = k; c < m; ++c) a[r * m + c] -= f * a[k * m + c];
      b[r] -= f * b[k];
    }
  }
  for (size_t k = m; k-- > 0;) {
    Cplx s = b[k];
    for (size_t c = k + 1; c < m; ++c) s -= a[k * m + c] * b[c];
    b[k] = s / a[k * m + k];
  }
  return min_pivot;
}

struct NewtonOutcome {
  std::vector<Cplx> x;
  double residual;
  double min_pivot;
  double jac_scale;
};

template <typename EvalFn>
NewtonOutcome newton_generic(EvalFn&& eval_fj, std::span<const Cplx> guess, double tol,
                             int max_iter = 60) {
  const size_t m = guess.size();
  std::vector<Cplx> x(guess.begin(), guess.end());
  std::vector<Cplx> f(m), jac(m * m);
  double min_pivot = std::numeric_limits<double>::infinity();
  double jac_scale = 1.0;
  const double big = 1e12;
  for (int it = 0; it <= max_iter; ++it) {
    eval_fj(x, f, jac);
    double res = 0.0;
    for (const Cplx v : f) res = std::max(res, std::abs(v));
    jac_scale = 0.0;
    for (const Cplx v : jac) jac_scale = std::max(jac_scale, std::abs(v));
    jac_scale = std::max(jac_scale, 1e-300);
    if (res < tol) {
      // Final-point conditioning estimate from one factorization.
      std::vector<Cplx> a = jac;
      std::vector<Cplx> rhs(m, Cplx(0, 0));
      min_pivot = solve_linear(a, rhs, m);
      return {std::move(x), res, min_pivot, jac_scale};
    }
    if (it == max_iter) throw NumericError("newton: no convergence after iteration cap");
    std::vector<Cplx> a = jac;
    std::vector<Cplx> rhs(m);
    for (size_t i = 0; i < m; ++i) rhs[i] = -f[i];
    const double piv = solve_linear(a, rhs, m);
    min_pivot = std::min(min_pivot, piv);
    if (piv < 1e-14 * jac_scale)
      throw NumericError("newton: singular Jacobian (condition estimate above threshold)");
    double step = 0.0;
    double xnorm = 0.0;
    for (size_t i = 0; i < m; ++i) {
      x[i] += rhs[i];
      step = std::max(step, std::abs(rhs[i]));
      xnorm = std::max(xnorm, std::abs(x[i]));
    }
    if (step > big * (1.0 + xnorm)) throw NumericError("newton: divergence");
  }
  throw NumericError("newton: unreachable");
}

}  // namespace

std::vector<Cplx> newton_correct(const SquareSystem& sys, std::span<const Cplx> guess,
                                 double tol) {
  if (static_cast<int>(guess.size()) != sys.dim())
    throw InputError("newton_correct: guess has wrong dimension");
  auto out = newton_generic(
      [&sys](const std::vector<Cplx>& x, std::vector<Cplx>& f, std::vector<Cplx>& j) {
        sys.eval(x, f);
        sys.jacobian(x, j);
      },
      guess, tol);
  // A well-separated simple solution keeps the Jacobian comfortably regular;
  // a pivot this small at the solution indicates a multiple root.
  if (out.min_pivot < std::sqrt(tol) * out.jac_scale)
    throw NumericError("newton: singular Jacobian (condition estimate above threshold)");
  return out.x;
}

std::vector<size_t> match_points(const std::vector<std::vector<Cplx>>& old_pts,
                                 const std::vector<std::vector<Cplx>>& new_pts, double margin) {
  if (old_pts.size() != new_pts.size())
    throw InputError("match_points: point lists differ in cardinality");
  const size_t n = old_pts.size();
  std::vector<size_t> new_to_old(n, 0);
  std::vector<bool> taken(n, false);
  double max_disp = 0.0;
  for (size_t j = 0; j < n; ++j) {
    size_t best = 0;
    double bestd = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
      const double d = point_dist(new_pts[j], old_pts[i]);
      if (d < bestd) {
        bestd = d;
        best = i;
      }
    }
    if (taken[best])
      throw NumericError("ambiguous point matching: two points share a nearest neighbor");
    taken[best] = true;
    new_to_old[j] = best;
    max_disp = std::max(max_disp, bestd);
  }
  double min_gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < n; ++i)
    for (size_t k = i + 1; k < n; ++k) min_gap = std::min(min_gap, point_dist(old_pts[i], old_pts[k]));
  if (n > 1 && min_gap < margin * max_disp)
    throw NumericError("ambiguous point matching: margin violated");
  std::vector<size_t> old_to_new(n, 0);
  for (size_t j = 0; j < n; ++j) old_to_new[new_to_old[j]] = j;
  return old_to_new;
}

std::vector<Cplx> newton_family(const ThetaFamily& fam, std::span<const Cplx> guess,
                                double theta, double tol) {
  auto out = newton_generic(
      [&fam, theta](const std::vector<Cplx>& x, std::vector<Cplx>& f, std::vector<Cplx>& j) {
        fam.eval(x, theta, f, j);
      },
      guess, tol);
  return out.x;
}

namespace {

std::vector<Cplx> newton_at_theta(const ThetaFamily& fam, std::span<const Cplx> guess,
                                  double theta, double tol) {
  return newton_family(fam, guess, theta, tol);
}

// One predictor-corrector step for the whole fiber; throws NumericError when
// the step must be subdivided.
std::vector<std::vector<Cplx>> step_fiber(const ThetaFamily& fam,
                                          const std::vector<std::vector<Cplx>>& pts,
                                          double theta_b, const Tolerances& tol) {
  std::vector<std::vector<Cplx>> next;
  next.reserve(pts.size());
  for (const auto& p : pts) {
    auto q = newton_at_theta(fam, p, theta_b, tol.newton_tol);
    if (fam.certify && !fam.certify(q, theta_b))
      throw NumericError("tracked point failed certification");
    next.push_back(std::move(q));
  }
  const auto matching = match_points(pts, next, tol.match_margin);
  for (size_t i = 0; i < matching.size(); ++i) {
    if (matching[i] != i) throw NumericError("tracked point jumped between sheets");
  }
  return next;
}

std::vector<std::vector<Cplx>> track_segment(const ThetaFamily& fam,
                                             std::vector<std::vector<Cplx>> pts, double a,
                                             double b, int depth, const Tolerances& tol,
                                             TrackStats* stats) {
  try {
    auto next = step_fiber(fam, pts, b, tol);
    if (stats) {
      stats->segments += 1;
      stats->max_depth = std::max(stats->max_depth, depth);
    }
    return next;
  } catch (const NumericError&) {
    if (depth >= tol.max_refine)
      throw NumericError(
          "track: max_refine exhausted (possible fiber cardinality change; epsilon too large?)",
          {}, depth);
    const double mid = 0.5 * (a + b);
    auto half = track_segment(fam, std::move(pts), a, mid, depth + 1, tol, stats);
    return track_segment(fam, std::move(half), mid, b, depth + 1, tol, stats);
  }
}

}  // namespace

std::vector<std::vector<Cplx>> track_path(const ThetaFamily& fam,
                                          std::vector<std::vector<Cplx>> pts, double theta_a,
                                          double theta_b, const Tolerances& tol,
                                          TrackStats* stats) {
  tol.validate();
  const int steps = tol.initial_steps;
  for (int k = 0; k < steps; ++k) {
    const double a = theta_a + (theta_b - theta_a) * static_cast<double>(k) / steps;
    const double b = theta_a + (theta_b - theta_a) * static_cast<double>(k + 1) / steps;
    pts = track_segment(fam, std::move(pts), a, b, 0, tol, stats);
  }
  return pts;
}

LoopResult track_loop(const ThetaFamily& fam, const TrackedFiber& start, double theta_end,
                      const Tolerances& tol) {
  LoopResult res;
  auto pts = track_path(fam, start.points, 0.0, theta_end, tol, &res.stats);
  // Sharpen the endpoints before closing the loop.
  for (auto& p : pts) p = newton_at_theta(fam, p, theta_end, tol.newton_tol * 1e-3);

  const auto old_to_new = match_points(start.points, pts, tol.match_margin);
  std::vector<int> sigma(start.points.size());
  for (size_t i = 0; i < old_to_new.size(); ++i)
    sigma[old_to_new[i]] = static_cast<int>(i);  // sheet j lands on start point sigma(j)

  double closure = 0.0;
  for (size_t i = 0; i < old_to_new.size(); ++i)
    closure = std::max(closure, point_dist(pts[old_to_new[i]], start.points[i]));
  if (closure > 10.0 * tol.newton_tol)
    throw NumericError("track: loop failed to close onto the start fiber");

  res.end.labels = start.labels;
  res.end.points = std::move(pts);
  res.end.residuals.assign(start.points.size(), 0.0);
  res.sigma = Permutation::from_images(std::move(sigma));
  res.closure_residual = closure;
  return res;
}

}  // namespace paramsurf
