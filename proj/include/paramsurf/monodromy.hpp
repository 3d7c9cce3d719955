#pragma once

#include <array>
#include <string>
#include <vector>

#include "paramsurf/germ.hpp"
#include "paramsurf/numeric.hpp"
#include "paramsurf/permutation.hpp"

namespace paramsurf {

struct LoopSpec {
  BranchSpec branch;
  double epsilon;
  Tolerances tolerances;
};

// Covering monodromy data for one branch of the double-point curve: the
// sheet count over a generic point, the permutation of sheets around the
// loop s = epsilon * e^{i theta}, and which origin preimage each sheet
// limits to along the radial path s -> 0.
struct BranchMonodromy {
  std::string label;
  int sheet_count = 0;
  Permutation sigma;
  TrackedFiber basepoint;            // labels "<chart>#<k>"
  std::vector<int> fiber_chart;      // chart index per sheet
  std::vector<int> radial_incidence; // sheet -> index into PreimageResult.points (-1 until computed)
  TrackStats stats;
  double closure_residual = 0.0;
};

// |pi^{-1}(gamma(epsilon))|, required stable under one epsilon halving.
int branch_fiber_count(const MapGerm& germ, const LoopSpec& loop);

// Track the fiber around the branch loop and extract the sheet permutation.
// Requires sheet_count >= 2.
BranchMonodromy branch_monodromy(const MapGerm& germ, const LoopSpec& loop);

// Track the basepoint fiber radially from s = epsilon toward 0 and assign
// each sheet to the origin preimage it limits to. Fills mono.radial_incidence
// and returns it.
std::vector<int> radial_limit(const MapGerm& germ, const LoopSpec& loop, BranchMonodromy& mono,
                              const PreimageResult& preimages);

// Relabeling of the loop basepoint fiber obtained by tracking it radially to
// s = epsilon/2 and matching against the fiber computed there; used by the
// epsilon-stability checks.
Permutation relabel_under_halving(const MapGerm& germ, const LoopSpec& loop,
                                  const BranchMonodromy& at_eps,
                                  const BranchMonodromy& at_half);

struct DiscoveredBranch {
  std::vector<std::array<Cplx, 3>> slice_points;  // one monodromy cycle of the slice
  int covering_degree = 1;                        // cycle length m
  std::array<Cplx, 3> basepoint() const { return slice_points.front(); }
};

// Numeric branch discovery for a curve given by two ideal generators in the
// target coordinates: solve the slice {g1 = g2 = 0, ell = epsilon}, track the
// slice points around ell = epsilon * e^{i theta}, and group them into
// monodromy cycles. Each cycle is one branch; its length is the covering
// degree of ell on that branch (loops on the branch are composite,
// theta: 0 -> 2 pi m).
std::vector<DiscoveredBranch> discover_branches(const MapGerm& germ, const MultiPoly& g1,
                                                const MultiPoly& g2, const MultiPoly& ell,
                                                double epsilon, const Tolerances& tols);

}  // namespace paramsurf
