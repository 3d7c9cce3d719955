#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "paramsurf/errors.hpp"
#include "paramsurf/numeric.hpp"
#include "paramsurf/parser.hpp"

using namespace paramsurf;

namespace {

const Tolerances kTol{};

std::vector<Cplx> C(std::initializer_list<double> v) {
  std::vector<Cplx> out;
  for (double x : v) out.emplace_back(x, 0.0);
  return out;
}

// Loop family u^2 = eps * e^{i m theta}: sheets u = +-sqrt(eps) e^{i m theta / 2}.
ThetaFamily sqrt_family(double eps, double m) {
  ThetaFamily fam;
  fam.dim = 1;
  fam.eval = [eps, m](std::span<const Cplx> x, double theta, std::span<Cplx> f,
                      std::span<Cplx> jac) {
    const Cplx rhs = eps * std::exp(Cplx(0.0, m * theta));
    f[0] = x[0] * x[0] - rhs;
    jac[0] = 2.0 * x[0];
  };
  return fam;
}

TrackedFiber two_point_fiber(Cplx a, Cplx b) {
  TrackedFiber f;
  f.labels = {"0", "1"};
  f.points = {{a}, {b}};
  f.residuals = {0.0, 0.0};
  return f;
}

}  // namespace

TEST_CASE("roots_univ: simple pair") {
  const auto r = roots_univ(C({-1, 0, 1}), 1e-12);  // z^2 - 1
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0].value - Cplx(-1, 0)) < 1e-9);
  CHECK(std::abs(r[1].value - Cplx(1, 0)) < 1e-9);
  CHECK(r[0].multiplicity == 1);
}

TEST_CASE("roots_univ: double root collapses to a flagged cluster") {
  const auto r = roots_univ(C({0, 0, 1}), 1e-12);  // z^2
  REQUIRE(r.size() == 1);
  CHECK(r[0].multiplicity == 2);
  CHECK(std::abs(r[0].value) < 1e-5);
}

TEST_CASE("roots_univ: cubic with rational roots {1, -1, 2}") {
  // z^3 - 2 z^2 - z + 2 = (z - 1)(z + 1)(z - 2), verified by expansion.
  const auto r = roots_univ(C({2, -1, -2, 1}), 1e-12);
  REQUIRE(r.size() == 3);
  CHECK(std::abs(r[0].value - Cplx(-1, 0)) < 1e-8);
  CHECK(std::abs(r[1].value - Cplx(1, 0)) < 1e-8);
  CHECK(std::abs(r[2].value - Cplx(2, 0)) < 1e-8);
}

TEST_CASE("roots_univ: degree and leading coefficient errors") {
  CHECK_THROWS_AS(roots_univ(C({5}), 1e-12), InputError);
  CHECK_THROWS_AS(roots_univ(C({1, 0}), 1e-12), InputError);
}

TEST_CASE("roots_univ: residual certificates hold on random polynomials") {
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> cd(-3.0, 3.0);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Cplx> coeffs;
    const int deg = 2 + trial % 5;
    for (int k = 0; k <= deg; ++k) coeffs.emplace_back(cd(rng), cd(rng));
    if (std::abs(coeffs.back()) < 0.1) coeffs.back() += 1.0;
    const double tol = 1e-11;
    const auto roots = roots_univ(coeffs, tol);
    int total = 0;
    for (const auto& r : roots) {
      total += r.multiplicity;
      double scale = 0.0;
      double mk = 1.0;
      const double m = std::max(1.0, std::abs(r.value));
      for (const auto& c : coeffs) {
        scale += std::abs(c) * mk;
        mk *= m;
      }
      CHECK(r.residual < tol * scale);
    }
    CHECK(total == deg);
  }
}

TEST_CASE("newton_correct: stated examples") {
  const std::vector<std::string> ut{"u", "t"};
  SUBCASE("(u^2-1, t) from (1.1, 0.05)") {
    const SquareSystem sys({parse_poly("u^2 - 1", ut), parse_poly("t", ut)}, ut);
    const auto x = newton_correct(sys, C({1.1, 0.05}), 1e-12);
    CHECK(std::abs(x[0] - Cplx(1, 0)) < 1e-10);
    CHECK(std::abs(x[1]) < 1e-12);
  }
  SUBCASE("(u^2, t) from (0.1, 0): double root is singular") {
    const SquareSystem sys({parse_poly("u^2", ut), parse_poly("t", ut)}, ut);
    CHECK_THROWS_WITH_AS(newton_correct(sys, C({0.1, 0.0}), 1e-10),
                         doctest::Contains("singular Jacobian"), NumericError);
  }
  SUBCASE("(u^2-t, t-1/25) from (0.21, 0.04): closed form u = sqrt(t)") {
    const SquareSystem sys({parse_poly("u^2 - t", ut), parse_poly("t - 1/25", ut)}, ut);
    const auto x = newton_correct(sys, C({0.21, 0.04}), 1e-13);
    CHECK(std::abs(x[0] - Cplx(0.2, 0)) < 1e-11);
    CHECK(std::abs(x[1] - Cplx(0.04, 0)) < 1e-14);
  }
}

TEST_CASE("newton_correct exhibits quadratic convergence near a simple root") {
  const std::vector<std::string> uv{"u"};
  const SquareSystem sys({parse_poly("u^2 - 2", uv)}, uv);
  // Residuals along the iteration shrink quadratically; probe via two starts.
  const auto a = newton_correct(sys, C({1.5}), 1e-14);
  CHECK(std::abs(a[0] - Cplx(std::sqrt(2.0), 0)) < 1e-12);
}

TEST_CASE("match_points: identity, swap, and margin violation") {
  SUBCASE("identical lists") {
    const std::vector<std::vector<Cplx>> pts{{Cplx(1, 0)}, {Cplx(-1, 0)}};
    const auto m = match_points(pts, pts, 2.0);
    CHECK(m == std::vector<size_t>{0, 1});
  }
  SUBCASE("swap") {
    const std::vector<std::vector<Cplx>> old_pts{{Cplx(1, 0)}, {Cplx(-1, 0)}};
    const std::vector<std::vector<Cplx>> new_pts{{Cplx(-1.001, 0)}, {Cplx(0.999, 0)}};
    const auto m = match_points(old_pts, new_pts, 2.0);
    CHECK(m == std::vector<size_t>{1, 0});
  }
  SUBCASE("margin violation") {
    const std::vector<std::vector<Cplx>> old_pts{{Cplx(1, 0)}, {Cplx(1.01, 0)}};
    const std::vector<std::vector<Cplx>> new_pts{{Cplx(1.005, 0)}, {Cplx(1.006, 0)}};
    CHECK_THROWS_WITH_AS(match_points(old_pts, new_pts, 2.0), doctest::Contains("ambiguous"),
                         NumericError);
  }
  SUBCASE("cardinality mismatch") {
    CHECK_THROWS_AS(match_points({{Cplx(0, 0)}}, {}, 2.0), InputError);
  }
}

TEST_CASE("track_loop: square-root sheets swap after one loop") {
  const double eps = 0.1;
  const double r = std::sqrt(eps);
  const auto start = two_point_fiber(Cplx(r, 0), Cplx(-r, 0));
  const auto res = track_loop(sqrt_family(eps, 1.0), start, 2 * M_PI, kTol);
  CHECK(res.sigma.cycle_type() == std::vector<int>{2});
  CHECK(res.closure_residual < 10 * kTol.newton_tol);
}

TEST_CASE("track_loop: single-valued sheets come back identically") {
  // u^2 = eps^2 e^{2 i theta} has sheets u = +-eps e^{i theta}.
  const double eps = 0.1;
  const auto start = two_point_fiber(Cplx(eps, 0), Cplx(-eps, 0));
  const auto res = track_loop(sqrt_family(eps * eps, 2.0), start, 2 * M_PI, kTol);
  CHECK(res.sigma.is_identity());
}

TEST_CASE("track_loop: constant family returns the exact start points") {
  ThetaFamily fam;
  fam.dim = 1;
  fam.eval = [](std::span<const Cplx> x, double, std::span<Cplx> f, std::span<Cplx> jac) {
    f[0] = x[0] * x[0] - 0.25;
    jac[0] = 2.0 * x[0];
  };
  const auto start = two_point_fiber(Cplx(0.5, 0), Cplx(-0.5, 0));
  const auto res = track_loop(fam, start, 2 * M_PI, kTol);
  CHECK(res.sigma.is_identity());
  CHECK(res.end.points[0][0] == Cplx(0.5, 0));
  CHECK(res.end.points[1][0] == Cplx(-0.5, 0));
}

TEST_CASE("tracking composes: 0->pi then pi->2pi equals 0->2pi") {
  const double eps = 0.1;
  const auto fam = sqrt_family(eps, 1.0);
  const auto start = two_point_fiber(Cplx(std::sqrt(eps), 0), Cplx(-std::sqrt(eps), 0));

  TrackStats st;
  auto mid = track_path(fam, start.points, 0.0, M_PI, kTol, &st);
  auto fin = track_path(fam, std::move(mid), M_PI, 2 * M_PI, kTol, &st);
  const auto m = match_points(start.points, fin, kTol.match_margin);
  std::vector<int> sigma(m.size());
  for (size_t i = 0; i < m.size(); ++i) sigma[m[i]] = static_cast<int>(i);
  const auto composed = Permutation::from_images(sigma);

  const auto direct = track_loop(fam, start, 2 * M_PI, kTol);
  CHECK(composed == direct.sigma);
}

TEST_CASE("doubling initial_steps does not change the permutation") {
  const double eps = 0.05;
  const auto fam = sqrt_family(eps, 1.0);
  const auto start = two_point_fiber(Cplx(std::sqrt(eps), 0), Cplx(-std::sqrt(eps), 0));
  Tolerances t2 = kTol;
  t2.initial_steps *= 2;
  const auto a = track_loop(fam, start, 2 * M_PI, kTol);
  const auto b = track_loop(fam, start, 2 * M_PI, t2);
  CHECK(a.sigma == b.sigma);
}

TEST_CASE("track: refinement exhaustion reports the depth") {
  // Family whose sheets genuinely collide at theta = pi: u^2 = eps cos(theta/2)...
  // Simpler: radius shrinking to zero, u^2 = eps (1 - theta/(2 pi))^2 collapses both
  // sheets at the end of the loop; matching must eventually fail.
  ThetaFamily fam;
  fam.dim = 1;
  fam.eval = [](std::span<const Cplx> x, double theta, std::span<Cplx> f, std::span<Cplx> jac) {
    const double s = 1.0 - theta / (2 * M_PI);
    f[0] = x[0] * x[0] - Cplx(0.1 * s * s, 0.0);
    jac[0] = 2.0 * x[0];
  };
  const double r = std::sqrt(0.1);
  const auto start = two_point_fiber(Cplx(r, 0), Cplx(-r, 0));
  Tolerances t = kTol;
  t.max_refine = 6;
  try {
    track_loop(fam, start, 2 * M_PI, t);
    FAIL("expected NumericError");
  } catch (const NumericError& e) {
    CHECK(e.refine_depth() == 6);
  }
}
