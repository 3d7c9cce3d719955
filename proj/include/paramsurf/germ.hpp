#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paramsurf/multipoly.hpp"
#include "paramsurf/numeric.hpp"

namespace paramsurf {

inline const std::vector<std::string> kSourceVars{"u", "t"};
inline const std::vector<std::string> kBranchVar{"s"};

// One chart of the normalization: a polynomial map (u,t) -> C^3 in adapted
// form, i.e. with one target coordinate identically equal to t. The chart is
// a germ at (0,0), so all three components vanish there.
struct Chart {
  std::string name;
  std::array<MultiPoly, 3> p;  // over (u, t)
  int adapted_index;           // 1..3

  Chart(std::string name, MultiPoly p1, MultiPoly p2, MultiPoly p3, int adapted);

  std::array<Cplx, 3> map(Cplx u, Cplx t) const;
  double target_residual(Cplx u, Cplx t, std::span<const Cplx> q) const;
};

struct MapGerm {
  std::vector<Chart> charts;
  std::array<std::string, 3> target_vars{"x", "y", "z"};
  double working_radius = 1.0;

  explicit MapGerm(std::vector<Chart> charts);
};

// An irreducible branch of the double-point curve, parameterized by s with
// gamma(0) = 0.
struct BranchSpec {
  std::string label;
  std::array<MultiPoly, 3> gamma;  // over (s)

  BranchSpec(std::string label, MultiPoly g1, MultiPoly g2, MultiPoly g3);

  std::array<Cplx, 3> at(Cplx s) const;
};

struct OriginPreimage {
  int chart;
  Cplx u;
  int multiplicity;
};

struct PreimageResult {
  std::vector<OriginPreimage> points;
  int b0 = 0;
};

// pi^{-1}(0): per chart, the set points (with multiplicity clusters
// collapsed) mapping to the origin. Throws InputError when a whole u-line
// maps to the origin.
PreimageResult preimage_origin(const MapGerm& germ, double tol);

struct FiberPoint {
  int chart;
  Cplx u;
  Cplx t;
  double residual;  // max-norm target residual
  int multiplicity;
};

// The fiber pi^{-1}(q), computed per chart as a filtered univariate solve.
// An empty result is a valid fiber. The solve is cross-checked against the
// other non-adapted coordinate when possible; a count mismatch raises
// NumericError("conditioning failure ...").
std::vector<FiberPoint> fiber_over(const MapGerm& germ, std::span<const Cplx> q, double tol);

enum class BranchStatus { InDoublePointCurve, DroppedUnibranched };

struct ChartDiagnostic {
  std::string name;
  bool adapted_ok = false;
  bool germ_ok = false;
  bool finite_ok = false;
  bool image_distinct_ok = false;
};

struct BranchDiagnostic {
  std::string label;
  int fiber_count = 0;
  BranchStatus status = BranchStatus::DroppedUnibranched;
};

struct ValidationReport {
  std::vector<ChartDiagnostic> charts;
  std::vector<BranchDiagnostic> branches;
  std::vector<std::string> notices;
  int b0 = 0;
  bool double_point_curve_empty() const;
};

// Full input validation: chart adaptedness and finiteness, generic chart
// image distinctness, branch membership in the image, generic fiber counts,
// and the partition of branches into double-point-curve members and dropped
// unibranched components.
ValidationReport validate_input(const MapGerm& germ, const std::vector<BranchSpec>& branches,
                                const Tolerances& tols, double epsilon);

// Acceptance threshold separating genuine fiber points from off-sheet
// candidates; callers of fiber_over use the same rule.
double fiber_filter_tol(double tol, std::span<const Cplx> q);

// Non-adapted coordinate indices usable for the univariate solve, lowest
// u-degree first. Throws InputError when the chart is not finite.
std::vector<int> chart_solving_coords(const Chart& ch);

}  // namespace paramsurf
