#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "paramsurf/errors.hpp"
#include "paramsurf/multipoly.hpp"
#include "paramsurf/numeric.hpp"
#include "paramsurf/parser.hpp"

using namespace paramsurf;

namespace {

MultiPoly P(const std::string& s, std::vector<std::string> vars) { return parse_poly(s, vars); }

// Independent evaluation oracle: plain term-by-term summation with powers by
// repeated multiplication, reading the term map directly.
Cplx naive_eval(const MultiPoly& p, const std::vector<Cplx>& pt) {
  Cplx acc(0.0, 0.0);
  for (const auto& [e, c] : p.terms()) {
    Cplx m(to_double(c), 0.0);
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) m *= pt[i];
    acc += m;
  }
  return acc;
}

MultiPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_deg,
                      int n_terms) {
  std::uniform_int_distribution<int> ed(0, max_deg);
  std::uniform_int_distribution<int> cd(-9, 9);
  MultiPoly p(vars);
  for (int t = 0; t < n_terms; ++t) {
    std::vector<int> e(vars.size());
    int budget = max_deg;
    for (auto& x : e) {
      x = std::min(ed(rng), budget);
      budget -= x;
    }
    int c = cd(rng);
    if (c == 0) c = 1;
    p.add_term(e, c);
  }
  return p;
}

}  // namespace

TEST_CASE("parse: direct term reading") {
  const MultiPoly p = P("u^2 - t", {"u", "t"});
  CHECK(p.terms().size() == 2);
  CHECK(p.terms().at({2, 0}) == 1);
  CHECK(p.terms().at({0, 1}) == -1);
}

TEST_CASE("parse: distributivity") {
  const MultiPoly p = P("u*(u^2 - t)", {"u", "t"});
  CHECK(p == P("u^3 - u*t", {"u", "t"}));
}

TEST_CASE("parse: paper surface equation") {
  const MultiPoly p = P("y^2 - x^3 - z^2*x^2", {"x", "y", "z"});
  CHECK(p.terms().size() == 3);
  CHECK(p.terms().at({0, 2, 0}) == 1);
  CHECK(p.terms().at({3, 0, 0}) == -1);
  CHECK(p.terms().at({2, 0, 2}) == -1);
}

TEST_CASE("parse: rational literals and unary minus") {
  const MultiPoly p = P("3/4*x - 1/2", {"x"});
  CHECK(p.terms().at({1}) == Rational(3) / 4);
  CHECK(p.terms().at({0}) == Rational(-1) / 2);
  CHECK(P("-x^2", {"x"}) == -P("x^2", {"x"}));
}

TEST_CASE("parse: errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_poly("u^2 - w", {"u", "t"}),
                       doctest::Contains("unknown identifier 'w'"), InputError);
  CHECK_THROWS_WITH_AS(parse_poly("u^-2", {"u"}), doctest::Contains("negative exponent"),
                       InputError);
  CHECK_THROWS_AS(parse_poly("u +", {"u"}), InputError);
  CHECK_THROWS_AS(parse_poly("2u", {"u"}), InputError);   // implicit multiplication
  CHECK_THROWS_AS(parse_poly("u/2", {"u"}), InputError);  // '/' outside a literal
  CHECK_THROWS_AS(parse_poly("1/0", {"u"}), InputError);
}

TEST_CASE("serialize/parse round-trip is the identity on canonical forms") {
  std::mt19937 rng(20240811);
  const std::vector<std::string> vars{"u", "t"};
  for (int i = 0; i < 60; ++i) {
    const MultiPoly p = random_poly(rng, vars, 5, 6);
    const std::string s = to_string(p);
    const MultiPoly q = parse_poly(s, vars);
    CHECK(q == p);
    CHECK(to_string(q) == s);
  }
  CHECK(to_string(P("0", {"u"})) == "0");
}

TEST_CASE("eval_complex: exact spot values") {
  const MultiPoly p = P("u^2 - t", {"u", "t"});
  const std::vector<Cplx> a{Cplx(2, 0), Cplx(1, 0)};
  CHECK(eval_complex(p, a).value == Cplx(3, 0));
  const std::vector<Cplx> b{Cplx(0, 1), Cplx(0, 0)};
  CHECK(eval_complex(p, b).value == Cplx(-1, 0));
}

TEST_CASE("eval_complex matches the naive summation oracle within the bound") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xd(-2.0, 2.0);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 40; ++i) {
    const MultiPoly p = random_poly(rng, vars, 6, 8);
    const std::vector<Cplx> pt{Cplx(xd(rng), xd(rng)), Cplx(xd(rng), xd(rng)),
                               Cplx(xd(rng), xd(rng))};
    const EvalResult r = eval_complex(p, pt);
    const Cplx o = naive_eval(p, pt);
    CHECK(std::abs(r.value - o) <= 2 * r.bound + 1e-300);
  }
}

TEST_CASE("eval_complex at rational points matches exact rational evaluation") {
  std::mt19937 rng(99);
  const std::vector<std::string> vars{"u", "t"};
  std::uniform_int_distribution<int> num(-6, 6);
  for (int i = 0; i < 30; ++i) {
    const MultiPoly p = random_poly(rng, vars, 5, 5);
    const std::vector<Rational> rp{Rational(num(rng), 4), Rational(num(rng), 8)};
    const std::vector<Cplx> cp{Cplx(to_double(rp[0]), 0), Cplx(to_double(rp[1]), 0)};
    const Rational exact = eval_rational(p, rp);
    const EvalResult approx = eval_complex(p, cp);
    // Quarters and eighths are exact in binary, so the two paths agree to roundoff.
    CHECK(std::abs(approx.value - Cplx(to_double(exact), 0)) <= approx.bound + 1e-300);
  }
}

TEST_CASE("derivative") {
  CHECK(derivative(P("u^2 - t", {"u", "t"}), "u") == P("2*u", {"u", "t"}));
  CHECK(derivative(P("u^2 - t", {"u", "t"}), "t") == P("-1", {"u", "t"}));
  CHECK(derivative(P("u^3 - u*t", {"u", "t"}), "u") == P("3*u^2 - t", {"u", "t"}));
  CHECK_THROWS_AS(derivative(P("u", {"u"}), "v"), InputError);
}

TEST_CASE("divided_difference: stated examples") {
  CHECK(divided_difference(P("u^2", {"u", "t"}), "u", "up") ==
        P("u + up", {"u", "t", "up"}));
  CHECK(divided_difference(P("u^3", {"u", "t"}), "u", "up") ==
        P("u^2 + u*up + up^2", {"u", "t", "up"}));
  // p(u)-p(u') expanded and divided by hand for p = u*(u^2-t).
  CHECK(divided_difference(P("u*(u^2 - t)", {"u", "t"}), "u", "up") ==
        P("u^2 + u*up + up^2 - t", {"u", "t", "up"}));
  CHECK_THROWS_AS(divided_difference(P("u^2", {"u", "t"}), "u", "t"), InputError);
}

TEST_CASE("divided_difference identity (u - u')*q - p(u) + p(u') == 0, randomized") {
  std::mt19937 rng(123);
  const std::vector<std::string> vars{"u", "t"};
  const std::vector<std::string> xvars{"u", "t", "up"};
  for (int i = 0; i < 50; ++i) {
    const MultiPoly p = random_poly(rng, vars, 8, 7);
    const MultiPoly q = divided_difference(p, "u", "up");
    MultiPoly p_u(xvars);
    MultiPoly p_up(xvars);
    for (const auto& [e, c] : p.terms()) {
      p_u.add_term({e[0], e[1], 0}, c);
      p_up.add_term({0, e[1], e[0]}, c);
    }
    const MultiPoly lhs =
        (P("u - up", xvars)) * q - p_u + p_up;
    CHECK(lhs.is_zero());
  }
}

TEST_CASE("resultant: shared root and elimination examples") {
  const std::vector<std::string> ut{"u", "t"};
  CHECK(resultant(P("u^2 - 1", {"u"}), P("u - 1", {"u"}), "u").is_zero());
  CHECK(resultant(P("u^2 - t", ut), P("u", ut), "u") == P("-t", {"t"}));
  const std::vector<std::string> uts{"u", "t", "s"};
  CHECK(resultant(P("u^2 - t", uts), P("u - s", uts), "u") == P("s^2 - t", {"t", "s"}));
  CHECK_THROWS_AS(resultant(P("0", {"u"}), P("u", {"u"}), "u"), InputError);
}

TEST_CASE("resultant agrees with the product-over-roots oracle at random points") {
  // res_u(f,g) evaluated at a point of the remaining variables equals
  // lc(f)^deg(g) * prod_{f(a)=0} g(a), with the roots found numerically.
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> num(-5, 5);
  const std::vector<std::string> vars{"u", "t"};
  int tested = 0;
  for (int trial = 0; trial < 40 && tested < 12; ++trial) {
    MultiPoly f = random_poly(rng, vars, 5, 4);
    MultiPoly g = random_poly(rng, vars, 4, 4);
    if (f.degree("u") < 1 || g.degree("u") < 1) continue;
    const MultiPoly res = resultant(f, g, "u");
    const Rational tval(num(rng), 3);
    const std::vector<Rational> rpt{0, tval};
    const Cplx tc(to_double(tval), 0.0);
    const std::vector<Cplx> cpt{Cplx(0, 0), tc};
    auto fc = univariate_coeffs(f, "u", cpt);
    auto gc = univariate_coeffs(g, "u", cpt);
    while (!fc.empty() && std::abs(fc.back()) < 1e-12) fc.pop_back();
    if (fc.size() < 2) continue;
    const auto roots = roots_univ(fc, 1e-12);
    Cplx prod = std::pow(fc.back(), static_cast<double>(gc.size() - 1));
    double scale = std::abs(prod);
    for (const auto& r : roots) {
      for (int m = 0; m < r.multiplicity; ++m) {
        Cplx gv(0, 0);
        for (size_t k = gc.size(); k-- > 0;) gv = gv * r.value + gc[k];
        prod *= gv;
        scale *= std::max(1.0, std::abs(gv));
      }
    }
    const MultiPoly res_t = res;  // over {t}
    const std::vector<Rational> tpt{tval};
    const double exact = to_double(eval_rational(res_t, tpt));
    CHECK(std::abs(prod - Cplx(exact, 0)) <= 1e-6 * std::max(1.0, scale));
    ++tested;
  }
  CHECK(tested >= 8);
}

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(P("(u - 1)*(u - 1)", {"u"}), "u") == P("u - 1", {"u"}));
  CHECK(squarefree_part(P("u^2 - t", {"u", "t"}), "u") == P("u^2 - t", {"u", "t"}));
  // u^3 - u*t^2 = u(u-t)(u+t): already square-free in u.
  CHECK(squarefree_part(P("u^3 - u*t^2", {"u", "t"}), "u") == P("u^3 - u*t^2", {"u", "t"}));
  CHECK(squarefree_part(P("u^2*(u - t)", {"u", "t"}), "u") == P("u^2 - u*t", {"u", "t"}));
}

TEST_CASE("gcd and exact division") {
  const std::vector<std::string> ut{"u", "t"};
  CHECK(poly_gcd(P("u^2 - t^2", ut), P("u^2 - 2*u*t + t^2", ut)) == P("u - t", ut));
  CHECK(exact_divide(P("u^2 - t^2", ut), P("u - t", ut)) == P("u + t", ut));
  CHECK_THROWS_AS(exact_divide(P("u^2 - t", ut), P("u - t", ut)), std::logic_error);
}

TEST_CASE("substitute") {
  const std::vector<std::string> ut{"u", "t"};
  // u -> u + t^2 in u^2 - t
  CHECK(substitute(P("u^2 - t", ut), "u", P("u + t^2", ut)) ==
        P("u^2 + 2*u*t^2 + t^4 - t", ut));
}
