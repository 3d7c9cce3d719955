#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "paramsurf/rational.hpp"

namespace paramsurf {

using Cplx = std::complex<double>;

// Graded lexicographic order on exponent vectors: total degree first, then
// lexicographic with the earlier variable weighing more.
struct GrlexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Multivariate polynomial with exact rational coefficients over a fixed,
// ordered list of variables. Terms are kept in canonical graded-lex order and
// never store zero coefficients, so equal polynomials compare equal
// structurally and serialize identically.
class MultiPoly {
 public:
  using TermMap = std::map<std::vector<int>, Rational, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, Rational c);
  static MultiPoly variable(std::vector<std::string> vars, const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int var_index(const std::string& name) const;  // -1 when absent

  // Max exponent of `name`; -1 for the zero polynomial.
  int degree(const std::string& name) const;
  int total_degree() const;  // -1 for zero

  void add_term(std::vector<int> expt, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

struct EvalResult {
  Cplx value;
  double bound;  // first-order roundoff bound on |value - exact|
};

// Formal partial derivative.
MultiPoly derivative(const MultiPoly& p, const std::string& var);

// q with (u - u') * q == p(u,...) - p(u',...). `u_prime` must be fresh.
MultiPoly divided_difference(const MultiPoly& p, const std::string& u, const std::string& u_prime);

// Sylvester resultant eliminating `var`, computed by fraction-free (Bareiss)
// elimination over the remaining variables.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);

// p / gcd(p, dp/dvar), normalized with grlex-leading coefficient 1.
MultiPoly squarefree_part(const MultiPoly& p, const std::string& var);

// Full multivariate gcd, normalized with grlex-leading coefficient 1.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// Exact quotient a / b; throws std::logic_error when b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

// Replace `var` by `repl` (same variable list).
MultiPoly substitute(const MultiPoly& p, const std::string& var, const MultiPoly& repl);

EvalResult eval_complex(const MultiPoly& p, std::span<const Cplx> point);
Rational eval_rational(const MultiPoly& p, std::span<const Rational> point);

// Coefficients of p as a univariate polynomial in `var` (ascending degree),
// with every other variable fixed to the matching entry of `point`
// (the entry at var's own index is ignored).
std::vector<Cplx> univariate_coeffs(const MultiPoly& p, const std::string& var,
                                    std::span<const Cplx> point);

// Canonical form: terms in descending graded-lex order. Round-trips through
// parse_poly.
std::string to_string(const MultiPoly& p);

}  // namespace paramsurf
