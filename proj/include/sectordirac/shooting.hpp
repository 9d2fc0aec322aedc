#pragma once
#include "sectordirac/grid.hpp"
#include "sectordirac/params.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace sectordirac {

struct ExponentFit {
  double exponent;  // slope of log|u| against log r
  double r_squared; // of the linear fit
  double curvature; // quadratic coefficient of log|u| in s = log r
  bool log_correction;
  int points;
};

//! Least-squares power law |u| ~ r^a over nodes with r in [window.first,
//! window.second]. The log flag is raised when the residual curvature is
//! significant and matches that of a log r factor, y'' = -(y')^2.
ExponentFit fit_exponent(const RadialSample &samples,
                         std::pair<double, double> window);

enum class Integrability { SquareIntegrable, NotSquareIntegrable, Indeterminate };
std::string_view to_string(Integrability v);

struct ShootingOptions {
  double r_out = 50.0;
  double r_min = 1e-6;
  int samples = 2000;
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  double fit_margin = 0.005;
  //! Fit window in units of r_min.
  double window_lo = 10.0;
  double window_hi = 1000.0;
};

struct ShootingResult {
  RadialSample solution;
  ExponentFit fit;
  Integrability verdict;
  bool l2_integrable_at_zero;
  int index_contribution;
  int steps;
};

//! Solve d_{nu,k} u = -/+ i u (sign +1 selects ker(h* + i)) inward from
//! r_out on the branch that decays at infinity and decide whether the
//! solution is square integrable at the vertex. The mass is irrelevant to the
//! deficiency indices and is ignored.
ShootingResult deficiency_index_numeric(const SectorCoupling &sc, int k,
                                        int sign,
                                        const ShootingOptions &opt = {});

//! Analytic rule: 1 iff delta_k < 1/4.
int analytic_deficiency(const SectorCoupling &sc, int k);

struct DeficiencyTask {
  SectorCoupling coupling;
  int k;
  int sign;
};

//! Parallel map over independent (omega, nu, k, sign) tasks.
std::vector<ShootingResult> deficiency_sweep(const std::vector<DeficiencyTask> &tasks,
                                             const ShootingOptions &opt = {});
namespace serial {
std::vector<ShootingResult> deficiency_sweep(const std::vector<DeficiencyTask> &tasks,
                                             const ShootingOptions &opt = {});
}

} // namespace sectordirac
