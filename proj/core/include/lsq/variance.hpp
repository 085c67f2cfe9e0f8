#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lsq/liouville.hpp"

namespace lsq {

// Phase-optimized normally ordered total variance of the detected quadrature
// (units |mu13|^2 f(r)^2). Negative f certifies total-variance squeezing.
struct SqueezingReport {
  double f_numeric = 0.0;
  std::optional<double> f_analytic;  // present only in the resonant
                                     // equal-Rabi regime
  double theta_opt = 0.0;            // optimal quadrature angle, in [0, pi)
  double rho11 = 0.0;
  double rho13_abs = 0.0;
  double phi31 = 0.0;                // phase of rho31
};

// f = 2 rho11 - 4 |rho13|^2 from a stationary state, plus the quadrature
// angle that attains it.
SqueezingReport squeezing_parameter(const StateVector& psi_ss);

// True when delta1 = delta2 = 0 and omega1 = omega2.
bool in_analytic_regime(const SystemParams& params);

// Closed rational form of f, valid in the resonant equal-Rabi regime only.
// Throws OutsideAnalyticRegime otherwise.
double squeezing_parameter_analytic(const SystemParams& params);

// squeezing_parameter with f_analytic filled in when the regime applies.
SqueezingReport full_report(const SystemParams& params,
                            const StateVector& psi_ss);

struct Omega3Minimum {
  double omega3_star = 0.0;
  double f_min = 0.0;
  double rho22 = 0.0;     // diagnostics at the minimizer: the system reduces
  double abs_rho12 = 0.0; // to an effective two-level atom when these vanish
};

// Grid scan followed by golden-section refinement of f over omega3 at fixed
// phase. Returns the boundary minimizer when no interior minimum exists.
Omega3Minimum minimize_over_omega3(const SystemParams& params,
                                   double omega3_lo, double omega3_hi,
                                   double grid_step = 0.05,
                                   double tol = 1e-6);

// f evaluated on a grid of relative phases via the numeric path.
std::vector<std::pair<double, double>> sweep_phase(
    const SystemParams& params, const std::vector<double>& phi_grid);

}  // namespace lsq
