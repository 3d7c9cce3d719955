#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "paramsurf/multipoly.hpp"
#include "paramsurf/permutation.hpp"

namespace paramsurf {

struct Tolerances {
  double newton_tol = 1e-10;
  double match_margin = 2.0;  // required ratio inter-point gap / step displacement
  int max_refine = 16;
  int initial_steps = 32;

  void validate() const;  // throws InputError on out-of-range values
};

// A fiber of labeled points, each a tuple of complex coordinates with a
// certified residual.
struct TrackedFiber {
  std::vector<std::string> labels;
  std::vector<std::vector<Cplx>> points;
  std::vector<double> residuals;

  size_t size() const { return labels.size(); }
};

struct RootCluster {
  Cplx value;
  int multiplicity;  // > 1 marks a collapsed near-coincident cluster
  double residual;
};

// All roots of sum_k coeffs[k] z^k (with multiplicity flags). Residuals are
// certified against tol * (coefficient magnitude scale). Near-coincident
// roots collapse to one cluster point.
std::vector<RootCluster> roots_univ(std::span<const Cplx> coeffs, double tol);

// Square polynomial system with exact coefficients; the Jacobian is formed
// symbolically once at construction.
class SquareSystem {
 public:
  SquareSystem(std::vector<MultiPoly> eqs, std::vector<std::string> vars);

  int dim() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }

  void eval(std::span<const Cplx> x, std::span<Cplx> f) const;
  void jacobian(std::span<const Cplx> x, std::span<Cplx> j) const;  // row-major

 private:
  std::vector<MultiPoly> eqs_;
  std::vector<std::string> vars_;
  std::vector<std::vector<MultiPoly>> jac_;
};

// Newton correction of `guess`; residual max-norm below tol on success.
// Throws NumericError on a (near-)singular Jacobian or divergence.
std::vector<Cplx> newton_correct(const SquareSystem& sys, std::span<const Cplx> guess,
                                 double tol);

// Global nearest-neighbor bijection old -> new with a margin certificate:
// min pairwise gap among old points >= margin * max assigned displacement.
// Throws NumericError("ambiguous point matching ...") when the certificate
// fails; callers subdivide their step in response.
std::vector<size_t> match_points(const std::vector<std::vector<Cplx>>& old_pts,
                                 const std::vector<std::vector<Cplx>>& new_pts, double margin);

// One-parameter family of square systems for path tracking. `certify` (when
// set) validates a corrected point against equations outside the square
// subsystem; a false return triggers step refinement.
struct ThetaFamily {
  int dim = 1;
  std::function<void(std::span<const Cplx> x, double theta, std::span<Cplx> f,
                     std::span<Cplx> jac)>
      eval;
  std::function<bool(std::span<const Cplx> x, double theta)> certify;
};

struct TrackStats {
  int max_depth = 0;  // deepest step-halving used
  long segments = 0;  // accepted steps
};

// Newton correction against a family frozen at `theta`.
std::vector<Cplx> newton_family(const ThetaFamily& fam, std::span<const Cplx> guess,
                                double theta, double tol);

// Predictor-corrector continuation of `pts` from theta_a to theta_b.
// Zeroth-order predictor, Newton corrector, certified matching per step,
// local step halving up to tol.max_refine.
std::vector<std::vector<Cplx>> track_path(const ThetaFamily& fam,
                                          std::vector<std::vector<Cplx>> pts, double theta_a,
                                          double theta_b, const Tolerances& tol,
                                          TrackStats* stats);

struct LoopResult {
  TrackedFiber end;
  Permutation sigma;  // sheet i returns on top of start point sigma(i)
  TrackStats stats;
  double closure_residual = 0.0;
};

// Track a closed loop theta: 0 -> theta_end and match the final fiber
// against the start fiber. theta_end is 2*pi*m for closed loops.
LoopResult track_loop(const ThetaFamily& fam, const TrackedFiber& start, double theta_end,
                      const Tolerances& tol);

double point_dist(std::span<const Cplx> a, std::span<const Cplx> b);

}  // namespace paramsurf
