#include "paramsurf/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "paramsurf/errors.hpp"

namespace paramsurf {

namespace {

struct ChartSheets {
  int chart;
  std::vector<size_t> fiber_indices;  // positions in the global fiber
};

std::vector<ChartSheets> group_by_chart(const std::vector<FiberPoint>& fiber) {
  std::vector<ChartSheets> out;
  for (size_t i = 0; i < fiber.size(); ++i) {
    if (out.empty() || out.back().chart != fiber[i].chart) out.push_back({fiber[i].chart, {}});
    out.back().fiber_indices.push_back(i);
  }
  return out;
}

// Loop family for the sheets of one chart over the branch loop
// s = epsilon * e^{i theta}. Unknown: u; t is pinned by the adapted
// coordinate. Certification checks the full target residual.
ThetaFamily chart_loop_family(const Chart& ch, const BranchSpec& br, double epsilon,
                              double newton_tol) {
  const int solve_i = chart_solving_coords(ch)[0];
  const int k = ch.adapted_index - 1;
  const MultiPoly dp = derivative(ch.p[static_cast<size_t>(solve_i)], "u");
  const MultiPoly ps = ch.p[static_cast<size_t>(solve_i)];

  ThetaFamily fam;
  fam.dim = 1;
  fam.eval = [&ch, &br, ps, dp, epsilon, k, solve_i](std::span<const Cplx> x, double theta,
                                                     std::span<Cplx> f, std::span<Cplx> jac) {
    const Cplx s = epsilon * std::exp(Cplx(0.0, theta));
    const auto q = br.at(s);
    const Cplx t = q[static_cast<size_t>(k)];
    const std::vector<Cplx> pt{x[0], t};
    f[0] = eval_complex(ps, pt).value - q[static_cast<size_t>(solve_i)];
    jac[0] = eval_complex(dp, pt).value;
  };
  fam.certify = [&ch, &br, epsilon, k, newton_tol](std::span<const Cplx> x, double theta) {
    const Cplx s = epsilon * std::exp(Cplx(0.0, theta));
    const auto q = br.at(s);
    const std::vector<Cplx> qv(q.begin(), q.end());
    return ch.target_residual(x[0], q[static_cast<size_t>(k)], qv) <=
           fiber_filter_tol(newton_tol, qv);
  };
  return fam;
}

// Radial family s: s_a -> s_b (real), theta in [0, 1].
ThetaFamily chart_radial_family(const Chart& ch, const BranchSpec& br, double s_a, double s_b,
                                double newton_tol) {
  const int solve_i = chart_solving_coords(ch)[0];
  const int k = ch.adapted_index - 1;
  const MultiPoly dp = derivative(ch.p[static_cast<size_t>(solve_i)], "u");
  const MultiPoly ps = ch.p[static_cast<size_t>(solve_i)];

  ThetaFamily fam;
  fam.dim = 1;
  fam.eval = [&br, ps, dp, s_a, s_b, k, solve_i](std::span<const Cplx> x, double theta,
                                                 std::span<Cplx> f, std::span<Cplx> jac) {
    const Cplx s(s_a + (s_b - s_a) * theta, 0.0);
    const auto q = br.at(s);
    const Cplx t = q[static_cast<size_t>(k)];
    const std::vector<Cplx> pt{x[0], t};
    f[0] = eval_complex(ps, pt).value - q[static_cast<size_t>(solve_i)];
    jac[0] = eval_complex(dp, pt).value;
  };
  fam.certify = [&ch, &br, s_a, s_b, k, newton_tol](std::span<const Cplx> x, double theta) {
    const Cplx s(s_a + (s_b - s_a) * theta, 0.0);
    const auto q = br.at(s);
    const std::vector<Cplx> qv(q.begin(), q.end());
    return ch.target_residual(x[0], q[static_cast<size_t>(k)], qv) <=
           fiber_filter_tol(newton_tol, qv);
  };
  return fam;
}

std::vector<FiberPoint> branch_basepoint_fiber(const MapGerm& germ, const LoopSpec& loop) {
  const auto q = loop.branch.at(Cplx(loop.epsilon, 0.0));
  const std::vector<Cplx> qv(q.begin(), q.end());
  return fiber_over(germ, qv, loop.tolerances.newton_tol);
}

Tolerances radial_tolerances(const Tolerances& t) {
  Tolerances r = t;
  r.initial_steps = std::max(8, t.initial_steps / 4);
  return r;
}

}  // namespace

int branch_fiber_count(const MapGerm& germ, const LoopSpec& loop) {
  loop.tolerances.validate();
  const int n = static_cast<int>(branch_basepoint_fiber(germ, loop).size());
  LoopSpec half = loop;
  half.epsilon = loop.epsilon / 2;
  const int n_half = static_cast<int>(branch_basepoint_fiber(germ, half).size());
  if (n != n_half)
    throw NumericError("branch '" + loop.branch.label +
                           "': fiber count unstable under epsilon halving; epsilon too large",
                       loop.branch.label);
  return n;
}

BranchMonodromy branch_monodromy(const MapGerm& germ, const LoopSpec& loop) {
  loop.tolerances.validate();
  const auto fiber = branch_basepoint_fiber(germ, loop);
  if (fiber.size() < 2)
    throw InputError("branch '" + loop.branch.label +
                     "': monodromy needs at least two sheets (fiber count " +
                     std::to_string(fiber.size()) + ")");
  for (const auto& p : fiber) {
    if (p.multiplicity > 1)
      throw NumericError("branch '" + loop.branch.label +
                             "': multiple fiber point at the basepoint; epsilon too large",
                         loop.branch.label);
  }

  BranchMonodromy out;
  out.label = loop.branch.label;
  out.sheet_count = static_cast<int>(fiber.size());
  out.radial_incidence.assign(fiber.size(), -1);

  for (size_t i = 0; i < fiber.size(); ++i) {
    const Chart& ch = germ.charts[static_cast<size_t>(fiber[i].chart)];
    out.basepoint.labels.push_back(ch.name + "#" + std::to_string(i));
    out.basepoint.points.push_back({fiber[i].u, fiber[i].t});
    out.basepoint.residuals.push_back(fiber[i].residual);
    out.fiber_chart.push_back(fiber[i].chart);
  }

  std::vector<int> images(fiber.size());
  const auto groups = group_by_chart(fiber);
  for (const auto& g : groups) {
    const Chart& ch = germ.charts[static_cast<size_t>(g.chart)];
    const auto fam =
        chart_loop_family(ch, loop.branch, loop.epsilon, loop.tolerances.newton_tol);
    TrackedFiber start;
    for (size_t idx : g.fiber_indices) {
      start.labels.push_back(std::to_string(idx));
      start.points.push_back({fiber[idx].u});
      start.residuals.push_back(fiber[idx].residual);
    }
    LoopResult res;
    try {
      res = track_loop(fam, start, 2 * M_PI, loop.tolerances);
    } catch (const NumericError& e) {
      throw NumericError("branch '" + loop.branch.label + "': " + e.what(), loop.branch.label,
                         e.refine_depth());
    }
    for (size_t a = 0; a < g.fiber_indices.size(); ++a) {
      images[g.fiber_indices[a]] =
          static_cast<int>(g.fiber_indices[static_cast<size_t>(res.sigma.apply(static_cast<int>(a)))]);
    }
    out.stats.max_depth = std::max(out.stats.max_depth, res.stats.max_depth);
    out.stats.segments += res.stats.segments;
    out.closure_residual = std::max(out.closure_residual, res.closure_residual);
  }
  out.sigma = Permutation::from_images(std::move(images));
  return out;
}

namespace {

// Track one chart's sheets from s = s_from down to s = s_to by successive
// halving segments.
std::vector<std::vector<Cplx>> radial_track_chart(const Chart& ch, const BranchSpec& br,
                                                  std::vector<std::vector<Cplx>> pts,
                                                  double s_from, double s_to,
                                                  const Tolerances& tols, TrackStats* stats) {
  const auto fam = chart_radial_family(ch, br, s_from, s_to, tols.newton_tol);
  return track_path(fam, std::move(pts), 0.0, 1.0, radial_tolerances(tols), stats);
}

}  // namespace

std::vector<int> radial_limit(const MapGerm& germ, const LoopSpec& loop, BranchMonodromy& mono,
                              const PreimageResult& preimages) {
  const auto groups_fiber = [&] {
    std::map<int, std::vector<size_t>> m;
    for (size_t i = 0; i < mono.fiber_chart.size(); ++i)
      m[mono.fiber_chart[i]].push_back(i);
    return m;
  }();

  std::vector<int> incidence(mono.fiber_chart.size(), -1);
  const double tol = loop.tolerances.newton_tol;

  for (const auto& [chart_idx, sheet_ids] : groups_fiber) {
    const Chart& ch = germ.charts[static_cast<size_t>(chart_idx)];
    // Origin preimages living in this chart (global indices).
    std::vector<size_t> pre_ids;
    for (size_t p = 0; p < preimages.points.size(); ++p) {
      if (preimages.points[p].chart == chart_idx) pre_ids.push_back(p);
    }
    if (pre_ids.empty())
      throw NumericError("branch '" + loop.branch.label + "': chart '" + ch.name +
                             "' has no origin preimage to match",
                         loop.branch.label);

    // Current sheet positions (u only; t follows the branch).
    std::vector<std::vector<Cplx>> pts;
    for (size_t i : sheet_ids) pts.push_back({mono.basepoint.points[i][0]});

    auto dist_to = [&](const std::vector<Cplx>& pt, double s, size_t pre) {
      const auto q = loop.branch.at(Cplx(s, 0.0));
      const Cplx t = q[static_cast<size_t>(ch.adapted_index - 1)];
      const Cplx du = pt[0] - preimages.points[pre].u;
      return std::sqrt(std::norm(du) + std::norm(t));
    };

    std::vector<double> initial_d1(sheet_ids.size());
    for (size_t a = 0; a < sheet_ids.size(); ++a) {
      double best = std::numeric_limits<double>::infinity();
      for (size_t p : pre_ids) best = std::min(best, dist_to(pts[a], loop.epsilon, p));
      initial_d1[a] = best;
    }

    std::vector<int> local(sheet_ids.size(), -1);
    double s = loop.epsilon;
    const int max_halvings = 40;
    for (int j = 0; j < max_halvings; ++j) {
      bool all_assigned = true;
      for (size_t a = 0; a < sheet_ids.size(); ++a) {
        if (local[a] >= 0) continue;
        double d1 = std::numeric_limits<double>::infinity();
        double d2 = std::numeric_limits<double>::infinity();
        size_t best = pre_ids[0];
        for (size_t p : pre_ids) {
          const double d = dist_to(pts[a], s, p);
          if (d < d1) {
            d2 = d1;
            d1 = d;
            best = p;
          } else {
            d2 = std::min(d2, d);
          }
        }
        const bool exact = d1 <= 10.0 * tol;
        const bool margin = d2 >= 2.0 * d1 && d1 <= 0.25 * std::max(initial_d1[a], 10.0 * tol);
        if (exact || margin) {
          local[a] = static_cast<int>(best);
        } else {
          all_assigned = false;
        }
      }
      if (all_assigned) break;
      if (j + 1 == max_halvings)
        throw NumericError("branch '" + loop.branch.label +
                               "': radial limit did not reach an origin preimage",
                           loop.branch.label);
      try {
        pts = radial_track_chart(ch, loop.branch, std::move(pts), s, s / 2, loop.tolerances,
                                 &mono.stats);
      } catch (const NumericError& e) {
        throw NumericError("branch '" + loop.branch.label + "': radial tracking failure: " +
                               e.what(),
                           loop.branch.label, e.refine_depth());
      }
      s /= 2;
    }
    for (size_t a = 0; a < sheet_ids.size(); ++a) incidence[sheet_ids[a]] = local[a];
  }

  mono.radial_incidence = incidence;
  return incidence;
}

Permutation relabel_under_halving(const MapGerm& germ, const LoopSpec& loop,
                                  const BranchMonodromy& at_eps,
                                  const BranchMonodromy& at_half) {
  if (at_eps.sheet_count != at_half.sheet_count)
    throw NumericError("branch '" + loop.branch.label +
                           "': sheet count changed under epsilon halving",
                       loop.branch.label);
  std::vector<int> images(static_cast<size_t>(at_eps.sheet_count), -1);
  TrackStats stats;

  std::map<int, std::vector<size_t>> eps_groups, half_groups;
  for (size_t i = 0; i < at_eps.fiber_chart.size(); ++i)
    eps_groups[at_eps.fiber_chart[i]].push_back(i);
  for (size_t i = 0; i < at_half.fiber_chart.size(); ++i)
    half_groups[at_half.fiber_chart[i]].push_back(i);
  if (eps_groups.size() != half_groups.size())
    throw NumericError("branch '" + loop.branch.label +
                           "': chart occupancy changed under epsilon halving",
                       loop.branch.label);

  for (const auto& [chart_idx, eps_ids] : eps_groups) {
    auto it = half_groups.find(chart_idx);
    if (it == half_groups.end() || it->second.size() != eps_ids.size())
      throw NumericError("branch '" + loop.branch.label +
                             "': chart occupancy changed under epsilon halving",
                         loop.branch.label);
    const Chart& ch = germ.charts[static_cast<size_t>(chart_idx)];
    std::vector<std::vector<Cplx>> pts;
    for (size_t i : eps_ids) pts.push_back({at_eps.basepoint.points[i][0]});
    pts = radial_track_chart(ch, loop.branch, std::move(pts), loop.epsilon, loop.epsilon / 2,
                             loop.tolerances, &stats);
    std::vector<std::vector<Cplx>> half_pts;
    for (size_t i : it->second) half_pts.push_back({at_half.basepoint.points[i][0]});
    const auto m = match_points(pts, half_pts, loop.tolerances.match_margin);
    for (size_t a = 0; a < eps_ids.size(); ++a)
      images[eps_ids[a]] = static_cast<int>(it->second[m[a]]);
  }
  return Permutation::from_images(std::move(images));
}

namespace {

MultiPoly linear_change2(const MultiPoly& p, const std::string& w1, const std::string& w2,
                         int a11, int a12, int a21, int a22) {
  // (w1, w2) -> (a11 w1 + a12 w2, a21 w1 + a22 w2), applied simultaneously.
  const auto& vars = p.vars();
  const int i1 = p.var_index(w1);
  const int i2 = p.var_index(w2);
  const MultiPoly e1 = MultiPoly::variable(vars, w1) * Rational(a11) +
                       MultiPoly::variable(vars, w2) * Rational(a12);
  const MultiPoly e2 = MultiPoly::variable(vars, w1) * Rational(a21) +
                       MultiPoly::variable(vars, w2) * Rational(a22);
  MultiPoly out(vars);
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> rest = e;
    const int k1 = rest[static_cast<size_t>(i1)];
    const int k2 = rest[static_cast<size_t>(i2)];
    rest[static_cast<size_t>(i1)] = 0;
    rest[static_cast<size_t>(i2)] = 0;
    MultiPoly term(vars);
    term.add_term(std::move(rest), c);
    out = out + term * e1.pow(static_cast<unsigned>(k1)) * e2.pow(static_cast<unsigned>(k2));
  }
  return out;
}

}  // namespace

std::vector<DiscoveredBranch> discover_branches(const MapGerm& germ, const MultiPoly& g1,
                                                const MultiPoly& g2, const MultiPoly& ell,
                                                double epsilon, const Tolerances& tols) {
  tols.validate();
  const std::vector<std::string> tv(germ.target_vars.begin(), germ.target_vars.end());
  for (const MultiPoly* p : {&g1, &g2, &ell}) {
    if (p->vars() != tv) throw InputError("curve data must use the target variables");
  }
  if (ell.total_degree() != 1) throw InputError("slice form must be linear");
  {
    const std::vector<Rational> zero{0, 0, 0};
    if (eval_rational(ell, zero) != 0) throw InputError("slice form must vanish at the origin");
  }
  if (g1.is_zero() || g2.is_zero()) throw InputError("curve ideal generators must be nonzero");

  // Eliminate the pivot variable of the slice form, exactly, with the slice
  // level as a symbolic variable E.
  int pivot = -1;
  for (int i = 0; i < 3; ++i) {
    if (ell.degree(tv[static_cast<size_t>(i)]) == 1) pivot = i;
  }
  if (pivot < 0) throw InputError("slice form must involve a target variable");
  std::vector<std::string> vars4 = tv;
  vars4.push_back("slice_E");
  auto lift = [&vars4, &tv](const MultiPoly& p) {
    MultiPoly out(vars4);
    for (const auto& [e, c] : p.terms()) {
      std::vector<int> d = e;
      d.push_back(0);
      out.add_term(std::move(d), c);
    }
    (void)tv;
    return out;
  };
  const MultiPoly ell4 = lift(ell);
  const std::string pv = tv[static_cast<size_t>(pivot)];
  Rational cpiv = 0;
  for (const auto& [e, c] : ell.terms()) {
    if (e[static_cast<size_t>(pivot)] == 1) cpiv = c;
  }
  // pivot = (E - (ell - cpiv*pivot)) / cpiv
  const MultiPoly pivot_expr =
      (MultiPoly::variable(vars4, "slice_E") -
       (ell4 - MultiPoly::variable(vars4, pv) * cpiv)) *
      (Rational(1) / cpiv);
  const MultiPoly h1 = substitute(lift(g1), pv, pivot_expr);
  const MultiPoly h2 = substitute(lift(g2), pv, pivot_expr);

  std::vector<std::string> rest;
  for (int i = 0; i < 3; ++i)
    if (i != pivot) rest.push_back(tv[static_cast<size_t>(i)]);

  // Fixed unimodular change to make the 2-variable elimination generic.
  const MultiPoly H1 = linear_change2(h1, rest[0], rest[1], 1, 2, 3, 7);
  const MultiPoly H2 = linear_change2(h2, rest[0], rest[1], 1, 2, 3, 7);
  if (H1.is_zero() || H2.is_zero())
    throw InputError("slice solve failure: a curve generator vanishes on the slice");

  MultiPoly elim(vars4);
  if (H1.degree(rest[1]) >= 1 && H2.degree(rest[1]) >= 1) {
    elim = resultant(H1, H2, rest[1]);
  } else {
    elim = H1.degree(rest[1]) == 0 ? H1 : H2;
  }
  if (elim.is_zero())
    throw InputError("slice form is degenerate on a component of the curve");

  // Specialize E := epsilon and read candidates off the elimination polynomial.
  const int iw1 = static_cast<int>(std::distance(
      vars4.begin(), std::find(vars4.begin(), vars4.end(), rest[0])));
  std::vector<Cplx> spec(vars4.size(), Cplx(0, 0));
  spec[vars4.size() - 1] = Cplx(epsilon, 0);
  std::vector<Cplx> ec = univariate_coeffs(elim, rest[0], spec);
  double scale = 0.0;
  for (const Cplx& c : ec) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) throw InputError("slice solve failure: elimination degenerates at epsilon");
  while (ec.size() > 1 && std::abs(ec.back()) <= 1e-10 * scale) ec.pop_back();
  if (ec.size() < 2) throw InputError("slice solve failure: no candidates in the slice");

  const auto w1_roots = roots_univ(ec, tols.newton_tol);

  // For each W1 candidate, solve for W2 with whichever equation depends on it.
  const MultiPoly* solver = H1.degree(rest[1]) >= 1 ? &H1 : &H2;
  const MultiPoly* checker = solver == &H1 ? &H2 : &H1;
  std::vector<std::array<Cplx, 3>> sols;
  for (const auto& rw1 : w1_roots) {
    std::vector<Cplx> at = spec;
    at[static_cast<size_t>(iw1)] = rw1.value;
    std::vector<Cplx> wc = univariate_coeffs(*solver, rest[1], at);
    double wscale = 0.0;
    for (const Cplx& c : wc) wscale = std::max(wscale, std::abs(c));
    while (wc.size() > 1 && std::abs(wc.back()) <= 1e-9 * std::max(wscale, 1e-300)) wc.pop_back();
    std::vector<Cplx> w2_candidates;
    if (wc.size() < 2) {
      if (wscale <= 1e-9) w2_candidates.push_back(Cplx(0, 0));  // equation vanished; try origin
    } else {
      for (const auto& r : roots_univ(wc, tols.newton_tol)) w2_candidates.push_back(r.value);
    }
    for (const Cplx w2 : w2_candidates) {
      std::vector<Cplx> full = at;
      const int iw2 = static_cast<int>(std::distance(
          vars4.begin(), std::find(vars4.begin(), vars4.end(), rest[1])));
      full[static_cast<size_t>(iw2)] = w2;
      if (std::abs(eval_complex(*checker, full).value) > 1e-6 * (1.0 + epsilon)) continue;
      // Undo the unimodular change and recover the pivot coordinate.
      const Cplx W1 = full[static_cast<size_t>(iw1)];
      const Cplx W2 = w2;
      std::array<Cplx, 3> q;
      q[static_cast<size_t>(std::distance(tv.begin(), std::find(tv.begin(), tv.end(), rest[0])))] =
          W1 + 2.0 * W2;
      q[static_cast<size_t>(std::distance(tv.begin(), std::find(tv.begin(), tv.end(), rest[1])))] =
          3.0 * W1 + 7.0 * W2;
      // Evaluate pivot from the slice equation.
      Cplx acc(epsilon, 0.0);
      for (const auto& [e, c] : ell.terms()) {
        for (int i = 0; i < 3; ++i) {
          if (i == pivot || e[static_cast<size_t>(i)] == 0) continue;
          acc -= to_double(c) * q[static_cast<size_t>(i)];
        }
      }
      q[static_cast<size_t>(pivot)] = acc / Cplx(to_double(cpiv), 0.0);
      sols.push_back(q);
    }
  }

  // Family for the moving slice {g1 = 0, g2 = 0, ell = epsilon e^{i theta}}.
  std::vector<std::vector<MultiPoly>> jac;
  for (const MultiPoly* e : {&g1, &g2, &ell}) {
    std::vector<MultiPoly> row;
    for (const auto& v : tv) row.push_back(derivative(*e, v));
    jac.push_back(std::move(row));
  }
  ThetaFamily fam;
  fam.dim = 3;
  fam.eval = [&g1, &g2, &ell, jac, epsilon](std::span<const Cplx> x, double theta,
                                            std::span<Cplx> f, std::span<Cplx> j) {
    const Cplx level = epsilon * std::exp(Cplx(0.0, theta));
    f[0] = eval_complex(g1, x).value;
    f[1] = eval_complex(g2, x).value;
    f[2] = eval_complex(ell, x).value - level;
    for (size_t r = 0; r < 3; ++r)
      for (size_t c = 0; c < 3; ++c) j[r * 3 + c] = eval_complex(jac[r][c], x).value;
  };

  // Polish each candidate on the original system and deduplicate.
  std::vector<std::array<Cplx, 3>> clean;
  for (const auto& s : sols) {
    std::vector<Cplx> polished;
    try {
      polished = newton_family(fam, std::vector<Cplx>(s.begin(), s.end()), 0.0, tols.newton_tol);
    } catch (const NumericError&) {
      continue;
    }
    bool dup = false;
    for (const auto& c : clean) {
      const std::vector<Cplx> a(c.begin(), c.end());
      if (point_dist(a, polished) < 1e-6 * (1.0 + epsilon)) dup = true;
    }
    if (!dup) clean.push_back({polished[0], polished[1], polished[2]});
  }

  if (clean.empty()) throw InputError("slice solve failure: no slice points found");
  std::sort(clean.begin(), clean.end(), [](const auto& a, const auto& b) {
    for (int i = 0; i < 3; ++i) {
      if (a[static_cast<size_t>(i)].real() != b[static_cast<size_t>(i)].real())
        return a[static_cast<size_t>(i)].real() < b[static_cast<size_t>(i)].real();
      if (a[static_cast<size_t>(i)].imag() != b[static_cast<size_t>(i)].imag())
        return a[static_cast<size_t>(i)].imag() < b[static_cast<size_t>(i)].imag();
    }
    return false;
  });

  // Track the slice fiber around the ell-circle; monodromy cycles = branches.
  TrackedFiber start;
  for (size_t i = 0; i < clean.size(); ++i) {
    start.labels.push_back(std::to_string(i));
    start.points.push_back({clean[i][0], clean[i][1], clean[i][2]});
    start.residuals.push_back(0.0);
  }
  const auto res = track_loop(fam, start, 2 * M_PI, tols);

  std::vector<DiscoveredBranch> out;
  for (const auto& cyc : res.sigma.cycles()) {
    DiscoveredBranch b;
    b.covering_degree = static_cast<int>(cyc.size());
    for (int idx : cyc) b.slice_points.push_back(clean[static_cast<size_t>(idx)]);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace paramsurf
