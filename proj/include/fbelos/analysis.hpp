#pragma once

#include <cstddef>
#include <vector>

#include "fbelos/belos.hpp"
#include "fbelos/report.hpp"

namespace fbelos {

struct AnalysisOptions {
  double rel_tol = numerics::kDefaultRelTol;  // quadrature
  double tol = 1e-9;                          // identity checks
  std::size_t grid = 101;                     // sampled x0 values
  kernels::Policy policy = kernels::Policy::Parallel;
};

/// Every applicable check for one f-belos. Checks that need finite,
/// non-parallel endpoint tangents (or a tangent rectangle) are reported as
/// skipped when the precondition does not hold.
AnalysisReport analyze(const FBelos& b, const AnalysisOptions& options = {});

/// One cell of a verification sweep.
struct SweepCell {
  Profile profile;
  double p = 0.5;
};

/// Constructs and analyzes each cell (nesting recorded, not required).
/// Cells are distributed over threads under Policy::Parallel; the i-th report
/// always belongs to the i-th cell.
std::vector<AnalysisReport> analyze_sweep(const std::vector<SweepCell>& cells,
                                          const AnalysisOptions& options,
                                          kernels::Policy policy = kernels::Policy::Parallel);

}  // namespace fbelos
