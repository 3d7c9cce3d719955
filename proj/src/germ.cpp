#include "paramsurf/germ.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "paramsurf/errors.hpp"

namespace paramsurf {

namespace {

const std::string kNoticeIcIso = "D_X empty; Q_X[2] = IC_X (comparison complex N = 0)";

bool is_exactly_t(const MultiPoly& p) {
  if (p.terms().size() != 1) return false;
  const auto& [e, c] = *p.terms().begin();
  return c == 1 && e == std::vector<int>{0, 1};
}

Rational eval_origin(const MultiPoly& p) {
  const std::vector<Rational> zero{0, 0};
  return eval_rational(p, zero);
}

// Exact coefficients of p(u, 0) in ascending powers of u.
std::vector<Rational> restrict_t0(const MultiPoly& p) {
  std::vector<Rational> out(static_cast<size_t>(std::max(p.degree("u"), 0)) + 1, 0);
  for (const auto& [e, c] : p.terms()) {
    if (e[1] == 0) out[static_cast<size_t>(e[0])] += c;
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  if (out.size() == 1 && out[0] == 0) out.clear();
  return out;  // empty means identically zero
}

}  // namespace

Chart::Chart(std::string name_, MultiPoly p1, MultiPoly p2, MultiPoly p3, int adapted)
    : name(std::move(name_)), p{std::move(p1), std::move(p2), std::move(p3)},
      adapted_index(adapted) {
  if (adapted < 1 || adapted > 3)
    throw InputError("chart '" + name + "': adapted index must be 1, 2, or 3");
  for (const auto& c : p) {
    if (c.vars() != kSourceVars)
      throw InputError("chart '" + name + "': components must be polynomials in (u, t)");
    if (eval_origin(c) != 0)
      throw InputError("chart '" + name + "': components must vanish at (0,0)");
  }
  if (!is_exactly_t(p[static_cast<size_t>(adapted - 1)]))
    throw InputError("chart '" + name + "' is not adapted: coordinate " +
                     std::to_string(adapted) + " must be exactly t");
}

std::array<Cplx, 3> Chart::map(Cplx u, Cplx t) const {
  const std::vector<Cplx> pt{u, t};
  std::array<Cplx, 3> out;
  for (int i = 0; i < 3; ++i) out[static_cast<size_t>(i)] = eval_complex(p[static_cast<size_t>(i)], pt).value;
  return out;
}

double Chart::target_residual(Cplx u, Cplx t, std::span<const Cplx> q) const {
  const auto im = map(u, t);
  double r = 0.0;
  for (int i = 0; i < 3; ++i) r = std::max(r, std::abs(im[static_cast<size_t>(i)] - q[static_cast<size_t>(i)]));
  return r;
}

MapGerm::MapGerm(std::vector<Chart> charts_) : charts(std::move(charts_)) {
  if (charts.empty()) throw InputError("map germ needs at least one chart");
}

BranchSpec::BranchSpec(std::string label_, MultiPoly g1, MultiPoly g2, MultiPoly g3)
    : label(std::move(label_)), gamma{std::move(g1), std::move(g2), std::move(g3)} {
  bool all_zero = true;
  for (const auto& g : gamma) {
    if (g.vars() != kBranchVar)
      throw InputError("branch '" + label + "': components must be polynomials in s");
    const std::vector<Rational> zero{0};
    if (eval_rational(g, zero) != 0)
      throw InputError("branch '" + label + "': gamma(0) must be 0");
    if (!g.is_zero()) all_zero = false;
  }
  if (all_zero) throw InputError("branch '" + label + "' is identically zero, not a curve");
}

std::array<Cplx, 3> BranchSpec::at(Cplx s) const {
  const std::vector<Cplx> pt{s};
  std::array<Cplx, 3> out;
  for (int i = 0; i < 3; ++i) out[static_cast<size_t>(i)] = eval_complex(gamma[static_cast<size_t>(i)], pt).value;
  return out;
}

double fiber_filter_tol(double tol, std::span<const Cplx> q) {
  double qn = 0.0;
  for (const Cplx& c : q) qn = std::max(qn, std::abs(c));
  return std::max(1e3 * tol, 1e-8) * (1.0 + qn);
}

namespace {

double root_solve_tol(double tol) { return std::min(tol, 1e-12); }

// A candidate u from the solve on coordinate solve_i carries a position
// error delta; it is a fiber point when every other coordinate's residual is
// explained by that error, to first order.
bool accept_candidate(const Chart& ch, int solve_i, Cplx u, Cplx t, std::span<const Cplx> q,
                      double tol, int mult, double* out_residual) {
  double qn = 0.0;
  for (const Cplx& c : q) qn = std::max(qn, std::abs(c));
  const double base = tol * (1.0 + qn);
  const std::vector<Cplx> pt{u, t};

  double delta;
  if (mult == 1) {
    const double ra = std::abs(eval_complex(ch.p[static_cast<size_t>(solve_i)], pt).value -
                               q[static_cast<size_t>(solve_i)]);
    const double da =
        std::abs(eval_complex(derivative(ch.p[static_cast<size_t>(solve_i)], "u"), pt).value);
    delta = (ra + base) / std::max(da, 1e-300);
  } else {
    delta = std::pow(base, 1.0 / static_cast<double>(mult));
  }

  for (int b = 0; b < 3; ++b) {
    if (b == solve_i || b + 1 == ch.adapted_index) continue;
    const double rb = std::abs(eval_complex(ch.p[static_cast<size_t>(b)], pt).value -
                               q[static_cast<size_t>(b)]);
    const double db =
        std::abs(eval_complex(derivative(ch.p[static_cast<size_t>(b)], "u"), pt).value);
    if (rb > 20.0 * base + 8.0 * db * delta) return false;
  }
  if (out_residual) *out_residual = ch.target_residual(u, t, q);
  return true;
}

}  // namespace

PreimageResult preimage_origin(const MapGerm& germ, double tol) {
  PreimageResult out;
  const std::array<Cplx, 3> origin{Cplx(0, 0), Cplx(0, 0), Cplx(0, 0)};
  for (size_t ci = 0; ci < germ.charts.size(); ++ci) {
    const Chart& ch = germ.charts[ci];
    // Restrict the non-adapted coordinates to t = 0, exactly.
    std::vector<std::pair<int, std::vector<Rational>>> restricted;
    bool any_nonzero = false;
    for (int i = 0; i < 3; ++i) {
      if (i + 1 == ch.adapted_index) continue;
      auto r = restrict_t0(ch.p[static_cast<size_t>(i)]);
      if (!r.empty()) any_nonzero = true;
      restricted.emplace_back(i, std::move(r));
    }
    if (!any_nonzero)
      throw InputError("chart '" + ch.name +
                       "': a whole u-line maps to the origin (non-isolated preimage)");
    // Solve with the lowest-degree nonzero restriction; filter with the rest.
    const std::vector<Rational>* best = nullptr;
    int solve_i = -1;
    for (const auto& [i, r] : restricted) {
      if (r.size() < 2) continue;  // constant: no equation to solve
      if (!best || r.size() < best->size()) {
        best = &r;
        solve_i = i;
      }
    }
    if (!best) {
      // All nonzero restrictions are constants; with the germ condition they
      // would vanish at u = 0, so this cannot happen for valid charts.
      throw InputError("chart '" + ch.name + "': degenerate restriction at t = 0");
    }
    std::vector<Cplx> coeffs;
    for (const auto& c : *best) coeffs.emplace_back(to_double(c), 0.0);
    const auto roots = roots_univ(coeffs, root_solve_tol(tol));
    for (const auto& r : roots) {
      if (accept_candidate(ch, solve_i, r.value, Cplx(0, 0), origin, tol, r.multiplicity,
                           nullptr)) {
        out.points.push_back({static_cast<int>(ci), r.value, r.multiplicity});
      }
    }
  }
  out.b0 = static_cast<int>(out.points.size());
  return out;
}

namespace {

// Univariate solve for one chart over a fixed target point, using the
// non-adapted coordinate `solve_i`; returns accepted fiber points.
std::vector<FiberPoint> chart_fiber(const Chart& ch, int chart_idx, int solve_i,
                                    std::span<const Cplx> q, double tol) {
  const Cplx t = q[static_cast<size_t>(ch.adapted_index - 1)];
  const std::vector<Cplx> fix{Cplx(0, 0), t};
  std::vector<Cplx> coeffs = univariate_coeffs(ch.p[static_cast<size_t>(solve_i)], "u", fix);
  coeffs[0] -= q[static_cast<size_t>(solve_i)];
  double scale = 0.0;
  for (const Cplx& c : coeffs) scale = std::max(scale, std::abs(c));
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-12 * scale) coeffs.pop_back();

  std::vector<FiberPoint> accepted;
  if (coeffs.size() < 2) return accepted;  // no u-dependence at this t: no solutions off-residual
  const auto roots = roots_univ(coeffs, tol);
  const double ftol = fiber_filter_tol(tol, q);
  const MultiPoly dp = derivative(ch.p[static_cast<size_t>(solve_i)], "u");
  for (const auto& r : roots) {
    Cplx u = r.value;
    if (r.multiplicity == 1) {
      // Certify simple roots with a few Newton steps on the solving equation.
      for (int it = 0; it < 30; ++it) {
        const std::vector<Cplx> pt{u, t};
        const Cplx f = eval_complex(ch.p[static_cast<size_t>(solve_i)], pt).value -
                       q[static_cast<size_t>(solve_i)];
        if (std::abs(f) < tol) break;
        const Cplx d = eval_complex(dp, pt).value;
        if (std::abs(d) < 1e-300) break;
        u -= f / d;
      }
    }
    const double res = ch.target_residual(u, t, q);
    if (res <= ftol) accepted.push_back({chart_idx, u, t, res, r.multiplicity});
  }
  std::sort(accepted.begin(), accepted.end(), [](const FiberPoint& a, const FiberPoint& b) {
    if (a.u.real() != b.u.real()) return a.u.real() < b.u.real();
    return a.u.imag() < b.u.imag();
  });
  return accepted;
}

}  // namespace

std::vector<int> chart_solving_coords(const Chart& ch) {
  std::vector<int> solvable;
  for (int i = 0; i < 3; ++i) {
    if (i + 1 == ch.adapted_index) continue;
    if (ch.p[static_cast<size_t>(i)].degree("u") >= 1) solvable.push_back(i);
  }
  if (solvable.empty())
    throw InputError("chart '" + ch.name + "' is not finite: no coordinate depends on u");
  std::sort(solvable.begin(), solvable.end(), [&](int a, int b) {
    return ch.p[static_cast<size_t>(a)].degree("u") < ch.p[static_cast<size_t>(b)].degree("u");
  });
  return solvable;
}

std::vector<FiberPoint> fiber_over(const MapGerm& germ, std::span<const Cplx> q, double tol) {
  if (q.size() != 3) throw InputError("fiber_over: target point must have three coordinates");
  for (const Cplx& c : q) {
    if (std::abs(c) > germ.working_radius)
      throw InputError("fiber_over: point outside the numeric working radius");
  }
  std::vector<FiberPoint> out;
  for (size_t ci = 0; ci < germ.charts.size(); ++ci) {
    const Chart& ch = germ.charts[ci];
    const std::vector<int> solvable = chart_solving_coords(ch);
    auto pts = chart_fiber(ch, static_cast<int>(ci), solvable[0], q, tol);
    if (solvable.size() > 1) {
      const auto alt = chart_fiber(ch, static_cast<int>(ci), solvable[1], q, tol);
      if (alt.size() != pts.size())
        throw NumericError("conditioning failure: residual filter inconsistent with root count on chart '" +
                           ch.name + "'");
    }
    out.insert(out.end(), pts.begin(), pts.end());
  }
  return out;
}

bool ValidationReport::double_point_curve_empty() const {
  return std::none_of(branches.begin(), branches.end(), [](const BranchDiagnostic& b) {
    return b.status == BranchStatus::InDoublePointCurve;
  });
}

ValidationReport validate_input(const MapGerm& germ, const std::vector<BranchSpec>& branches,
                                const Tolerances& tols, double epsilon) {
  tols.validate();
  if (!(epsilon > 0) || epsilon >= germ.working_radius)
    throw InputError("epsilon must be positive and below the working radius");
  ValidationReport rep;

  // Chart-level checks. Adaptedness and the germ condition hold by
  // construction; re-verify so the diagnostic stands on its own.
  for (const Chart& ch : germ.charts) {
    ChartDiagnostic d;
    d.name = ch.name;
    d.adapted_ok = is_exactly_t(ch.p[static_cast<size_t>(ch.adapted_index - 1)]);
    d.germ_ok = true;
    for (const auto& c : ch.p) d.germ_ok = d.germ_ok && eval_origin(c) == 0;
    d.finite_ok = false;
    for (int i = 0; i < 3; ++i) {
      if (i + 1 == ch.adapted_index) continue;
      if (ch.p[static_cast<size_t>(i)].degree("u") >= 1) d.finite_ok = true;
    }
    d.image_distinct_ok = true;
    rep.charts.push_back(d);
    if (!d.adapted_ok) throw InputError("chart '" + ch.name + "' is not adapted");
    if (!d.finite_ok) throw InputError("chart '" + ch.name + "' is not finite");
  }

  // Generic image distinctness: points sampled on one chart's image should
  // not be hit by another chart (off the double-point locus). Fixed seed for
  // determinism; a chart is flagged only when every sample is hit.
  if (germ.charts.size() > 1) {
    std::mt19937 rng(0x5eed);
    std::uniform_real_distribution<double> ud(0.25, 0.6);
    for (size_t i = 0; i < germ.charts.size(); ++i) {
      for (size_t j = 0; j < germ.charts.size(); ++j) {
        if (i == j) continue;
        int hits = 0;
        const int samples = 3;
        for (int k = 0; k < samples; ++k) {
          const Cplx u(ud(rng) * germ.working_radius * 0.5, 0.013 * (k + 1));
          const Cplx t(ud(rng) * germ.working_radius * 0.5, -0.007 * (k + 1));
          const auto q = germ.charts[i].map(u, t);
          MapGerm single({germ.charts[j]});
          single.working_radius = germ.working_radius * 4;  // samples may exceed the germ radius
          try {
            if (!fiber_over(single, q, tols.newton_tol).empty()) ++hits;
          } catch (const NumericError&) {
            // treat a failed solve as a non-hit for the distinctness probe
          }
        }
        if (hits == samples) {
          rep.charts[i].image_distinct_ok = false;
          throw InputError("charts '" + germ.charts[i].name + "' and '" + germ.charts[j].name +
                           "' appear to have the same image");
        }
      }
    }
  }

  const PreimageResult pre = preimage_origin(germ, tols.newton_tol);
  rep.b0 = pre.b0;

  for (const BranchSpec& br : branches) {
    auto count_at = [&](double eps) {
      const auto q = br.at(Cplx(eps, 0.0));
      const std::vector<Cplx> qv(q.begin(), q.end());
      return static_cast<int>(fiber_over(germ, qv, tols.newton_tol).size());
    };
    const int n = count_at(epsilon);
    if (n == 0) throw InputError("branch '" + br.label + "' is not in the image of the germ");
    const int n_half = count_at(epsilon / 2);
    if (n_half != n)
      throw NumericError("branch '" + br.label +
                         "': fiber count unstable under epsilon halving; epsilon too large",
                         br.label);
    BranchDiagnostic d;
    d.label = br.label;
    d.fiber_count = n;
    d.status = n >= 2 ? BranchStatus::InDoublePointCurve : BranchStatus::DroppedUnibranched;
    if (n == 1)
      rep.notices.push_back("branch '" + br.label +
                            "' has generic fiber count 1: excluded from D_X");
    rep.branches.push_back(d);
  }
  if (rep.double_point_curve_empty()) rep.notices.push_back(kNoticeIcIso);
  return rep;
}

}  // namespace paramsurf
