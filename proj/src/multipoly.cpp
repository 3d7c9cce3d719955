#include "paramsurf/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "paramsurf/errors.hpp"

namespace paramsurf {

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, Rational c) {
  MultiPoly p(std::move(vars));
  p.add_term(std::vector<int>(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
  MultiPoly p(std::move(vars));
  const int idx = p.var_index(name);
  if (idx < 0) throw InputError("unknown variable '" + name + "'");
  std::vector<int> e(p.vars_.size(), 0);
  e[static_cast<size_t>(idx)] = 1;
  p.add_term(std::move(e), 1);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

int MultiPoly::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

int MultiPoly::degree(const std::string& name) const {
  if (terms_.empty()) return -1;
  const int idx = var_index(name);
  if (idx < 0) throw InputError("unknown variable '" + name + "'");
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(idx)]);
  return d;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void MultiPoly::add_term(std::vector<int> expt, const Rational& c) {
  if (c == 0) return;
  if (expt.size() != vars_.size()) throw std::logic_error("exponent vector length mismatch");
  auto it = terms_.find(expt);
  if (it == terms_.end()) {
    terms_.emplace(std::move(expt), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

namespace {
void require_same_vars(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars() != b.vars()) throw std::logic_error("polynomial variable lists differ");
}
}  // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require_same_vars(*this, o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  require_same_vars(*this, o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_same_vars(*this, o);
  MultiPoly r(vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  MultiPoly r(vars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = MultiPoly::constant(vars_, 1);
  MultiPoly b = *this;
  while (e != 0) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

MultiPoly derivative(const MultiPoly& p, const std::string& var) {
  const int idx = p.var_index(var);
  if (idx < 0) throw InputError("unknown variable '" + var + "'");
  MultiPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    const int k = e[static_cast<size_t>(idx)];
    if (k == 0) continue;
    std::vector<int> d = e;
    d[static_cast<size_t>(idx)] = k - 1;
    r.add_term(std::move(d), c * k);
  }
  return r;
}

MultiPoly divided_difference(const MultiPoly& p, const std::string& u, const std::string& u_prime) {
  const int uidx = p.var_index(u);
  if (uidx < 0) throw InputError("unknown variable '" + u + "'");
  if (p.var_index(u_prime) >= 0)
    throw InputError("variable '" + u_prime + "' collides with an existing variable");
  std::vector<std::string> vars = p.vars();
  vars.push_back(u_prime);
  MultiPoly r(vars);
  for (const auto& [e, c] : p.terms()) {
    const int k = e[static_cast<size_t>(uidx)];
    // u^k - u'^k = (u - u') * sum_{i<k} u^i u'^{k-1-i}
    for (int i = 0; i < k; ++i) {
      std::vector<int> d(e.begin(), e.end());
      d[static_cast<size_t>(uidx)] = i;
      d.push_back(k - 1 - i);
      r.add_term(std::move(d), c);
    }
  }
  return r;
}

namespace {

struct LeadTerm {
  std::vector<int> expt;
  Rational coeff;
};

LeadTerm leading_term(const MultiPoly& p) {
  auto it = std::prev(p.terms().end());
  return {it->first, it->second};
}

bool expt_divides(const std::vector<int>& den, const std::vector<int>& num) {
  for (size_t i = 0; i < den.size(); ++i) {
    if (den[i] > num[i]) return false;
  }
  return true;
}

// Leading-coefficient-1 normalization; canonical representative of the
// associate class over the field of rationals.
MultiPoly normalize_monic(const MultiPoly& p) {
  if (p.is_zero()) return p;
  const Rational lead = leading_term(p).coeff;
  return p * (Rational(1) / lead);
}

// Coefficients of p in `var`, each over the variable list with `var` dropped.
std::vector<MultiPoly> coeffs_in_var(const MultiPoly& p, const std::string& var,
                                     std::vector<std::string>* rest_out) {
  const int idx = p.var_index(var);
  if (idx < 0) throw InputError("unknown variable '" + var + "'");
  std::vector<std::string> rest = p.vars();
  rest.erase(rest.begin() + idx);
  if (rest_out) *rest_out = rest;
  const int d = std::max(p.degree(var), 0);
  std::vector<MultiPoly> out(static_cast<size_t>(d) + 1, MultiPoly(rest));
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> r = e;
    const int k = r[static_cast<size_t>(idx)];
    r.erase(r.begin() + idx);
    out[static_cast<size_t>(k)].add_term(std::move(r), c);
  }
  return out;
}

MultiPoly embed(const MultiPoly& p, const std::vector<std::string>& vars) {
  MultiPoly r(vars);
  std::vector<int> pos(p.vars().size());
  for (size_t i = 0; i < p.vars().size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), p.vars()[i]);
    if (it == vars.end()) throw std::logic_error("embed: missing variable");
    pos[i] = static_cast<int>(it - vars.begin());
  }
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> d(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) d[static_cast<size_t>(pos[i])] = e[i];
    r.add_term(std::move(d), c);
  }
  return r;
}

// Pseudo-remainder of f by g in `var` (both nonzero, deg f >= deg g >= 0).
MultiPoly pseudo_rem(MultiPoly f, const MultiPoly& g, const std::string& var) {
  const int dg = g.degree(var);
  auto g_coeffs = coeffs_in_var(g, var, nullptr);
  const MultiPoly lc_g = embed(g_coeffs.back(), g.vars());
  const int gidx = g.var_index(var);
  while (!f.is_zero() && f.degree(var) >= dg) {
    const int df = f.degree(var);
    auto f_coeffs = coeffs_in_var(f, var, nullptr);
    const MultiPoly lc_f = embed(f_coeffs.back(), f.vars());
    MultiPoly shift(f.vars());
    std::vector<int> e(f.vars().size(), 0);
    e[static_cast<size_t>(gidx)] = df - dg;
    shift.add_term(std::move(e), 1);
    f = lc_g * f - lc_f * shift * g;
  }
  return f;
}

MultiPoly content_in_var(const MultiPoly& p, const std::string& var) {
  std::vector<std::string> rest;
  auto cs = coeffs_in_var(p, var, &rest);
  MultiPoly g(rest);
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize_monic(c) : poly_gcd(g, c);
  }
  return g;
}

MultiPoly gcd_in_var(const MultiPoly& a, const MultiPoly& b, const std::string& var) {
  const MultiPoly cont_a = content_in_var(a, var);
  const MultiPoly cont_b = content_in_var(b, var);
  MultiPoly pa = exact_divide(a, embed(cont_a, a.vars()));
  MultiPoly pb = exact_divide(b, embed(cont_b, b.vars()));
  const MultiPoly cont_gcd = poly_gcd(cont_a, cont_b);

  MultiPoly f = pa.degree(var) >= pb.degree(var) ? pa : pb;
  MultiPoly g = pa.degree(var) >= pb.degree(var) ? pb : pa;
  MultiPoly pp_gcd(a.vars());
  while (true) {
    if (g.is_zero()) {
      pp_gcd = f;
      break;
    }
    if (g.degree(var) == 0) {
      // Nonzero remainder free of var: the primitive parts are coprime.
      pp_gcd = MultiPoly::constant(a.vars(), 1);
      break;
    }
    MultiPoly r = pseudo_rem(f, g, var);
    f = g;
    if (r.is_zero()) {
      g = r;
    } else {
      g = normalize_monic(exact_divide(r, embed(content_in_var(r, var), r.vars())));
    }
  }
  // pp_gcd is primitive in var up to rational content; strip it.
  if (!pp_gcd.is_constant()) {
    pp_gcd = exact_divide(pp_gcd, embed(content_in_var(pp_gcd, var), pp_gcd.vars()));
  }
  return normalize_monic(embed(cont_gcd, a.vars()) * pp_gcd);
}

}  // namespace

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  require_same_vars(a, b);
  if (b.is_zero()) throw std::logic_error("division by zero polynomial");
  MultiPoly q(a.vars());
  MultiPoly r = a;
  const LeadTerm lb = leading_term(b);
  while (!r.is_zero()) {
    const LeadTerm lr = leading_term(r);
    if (!expt_divides(lb.expt, lr.expt)) throw std::logic_error("non-exact polynomial division");
    std::vector<int> e(lr.expt.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = lr.expt[i] - lb.expt[i];
    MultiPoly t(a.vars());
    t.add_term(std::move(e), lr.coeff / lb.coeff);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  require_same_vars(a, b);
  if (a.is_zero()) return normalize_monic(b);
  if (b.is_zero()) return normalize_monic(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.vars(), 1);
  for (const auto& v : a.vars()) {
    if (a.degree(v) > 0 || b.degree(v) > 0) return gcd_in_var(a, b, v);
  }
  return MultiPoly::constant(a.vars(), 1);
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  if (p.is_zero() || q.is_zero()) throw InputError("resultant of a zero polynomial");
  const int m = p.degree(var);
  const int n = q.degree(var);
  if (m < 1 || n < 1)
    throw InputError("resultant requires positive degree in '" + var + "' for both polynomials");

  std::vector<std::string> rest;
  auto pc = coeffs_in_var(p, var, &rest);
  auto qc = coeffs_in_var(q, var, nullptr);

  // Sylvester matrix: n rows of p's coefficients, m rows of q's, highest first.
  const int N = m + n;
  const MultiPoly zero(rest);
  std::vector<std::vector<MultiPoly>> M(static_cast<size_t>(N),
                                        std::vector<MultiPoly>(static_cast<size_t>(N), zero));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) M[r][r + k] = pc[static_cast<size_t>(m - k)];
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) M[n + r][r + k] = qc[static_cast<size_t>(n - k)];
  }

  // Bareiss fraction-free elimination; divisions are exact.
  MultiPoly prev = MultiPoly::constant(rest, 1);
  int sign = 1;
  for (int k = 0; k + 1 < N; ++k) {
    if (M[k][k].is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < N; ++r) {
        if (!M[r][k].is_zero()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return zero;  // singular: resultant vanishes identically
      std::swap(M[static_cast<size_t>(k)], M[static_cast<size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        M[i][j] = exact_divide(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      }
      M[i][k] = zero;
    }
    prev = M[k][k];
  }
  MultiPoly det = M[static_cast<size_t>(N - 1)][static_cast<size_t>(N - 1)];
  return sign < 0 ? -det : det;
}

MultiPoly squarefree_part(const MultiPoly& p, const std::string& var) {
  if (p.is_zero()) throw InputError("squarefree part of the zero polynomial");
  if (p.degree(var) <= 0) return normalize_monic(p);
  const MultiPoly g = poly_gcd(p, derivative(p, var));
  return normalize_monic(exact_divide(p, g));
}

MultiPoly substitute(const MultiPoly& p, const std::string& var, const MultiPoly& repl) {
  require_same_vars(p, repl);
  const int idx = p.var_index(var);
  if (idx < 0) throw InputError("unknown variable '" + var + "'");
  MultiPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> rest = e;
    const int k = rest[static_cast<size_t>(idx)];
    rest[static_cast<size_t>(idx)] = 0;
    MultiPoly t(p.vars());
    t.add_term(std::move(rest), c);
    r = r + t * repl.pow(static_cast<unsigned>(k));
  }
  return r;
}

EvalResult eval_complex(const MultiPoly& p, std::span<const Cplx> point) {
  if (point.size() != p.vars().size())
    throw InputError("evaluation point has wrong number of coordinates");
  // Power tables per variable.
  std::vector<std::vector<Cplx>> pows(p.vars().size());
  for (size_t i = 0; i < p.vars().size(); ++i) {
    const int d = p.is_zero() ? 0 : p.degree(p.vars()[i]);
    pows[i].resize(static_cast<size_t>(d) + 1);
    pows[i][0] = Cplx(1.0, 0.0);
    for (int k = 1; k <= d; ++k) pows[i][static_cast<size_t>(k)] = pows[i][static_cast<size_t>(k - 1)] * point[i];
  }
  Cplx value(0.0, 0.0);
  double bound = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (const auto& [e, c] : p.terms()) {
    Cplx mono(1.0, 0.0);
    int deg = 0;
    for (size_t i = 0; i < e.size(); ++i) {
      mono *= pows[i][static_cast<size_t>(e[i])];
      deg += e[i];
    }
    const double cd = std::abs(to_double(c));
    value += to_double(c) * mono;
    bound += cd * std::abs(mono) * static_cast<double>(deg + 2) * eps;
  }
  return {value, bound};
}

Rational eval_rational(const MultiPoly& p, std::span<const Rational> point) {
  if (point.size() != p.vars().size())
    throw InputError("evaluation point has wrong number of coordinates");
  Rational value = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational mono = 1;
    for (size_t i = 0; i < e.size(); ++i) mono *= rational_pow(point[i], static_cast<unsigned>(e[i]));
    value += c * mono;
  }
  return value;
}

std::vector<Cplx> univariate_coeffs(const MultiPoly& p, const std::string& var,
                                    std::span<const Cplx> point) {
  const int idx = p.var_index(var);
  if (idx < 0) throw InputError("unknown variable '" + var + "'");
  if (point.size() != p.vars().size())
    throw InputError("evaluation point has wrong number of coordinates");
  const int d = std::max(p.degree(var), 0);
  std::vector<Cplx> out(static_cast<size_t>(d) + 1, Cplx(0.0, 0.0));
  for (const auto& [e, c] : p.terms()) {
    Cplx mono(to_double(c), 0.0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (static_cast<int>(i) == idx) continue;
      for (int k = 0; k < e[i]; ++k) mono *= point[i];
    }
    out[static_cast<size_t>(e[static_cast<size_t>(idx)])] += mono;
  }
  return out;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string monos;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!monos.empty()) monos += "*";
      monos += p.vars()[i];
      if (e[i] > 1) monos += "^" + std::to_string(e[i]);
    }
    if (monos.empty()) {
      os << mag.str();
    } else if (mag == 1) {
      os << monos;
    } else {
      os << mag.str() << "*" << monos;
    }
  }
  return os.str();
}

}  // namespace paramsurf
