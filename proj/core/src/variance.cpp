#include "lsq/variance.hpp"

#include <cmath>

#include "lsq/errors.hpp"

namespace lsq {

SqueezingReport squeezing_parameter(const StateVector& psi_ss) {
  SqueezingReport report;
  report.rho11 = std::real(psi_ss.rho11());
  const complexd rho13 = psi_ss.rho13();
  report.rho13_abs = std::abs(rho13);
  report.phi31 = std::arg(std::conj(rho13));
  report.f_numeric =
      kDetectionPrefactor *
      (2.0 * report.rho11 - 4.0 * report.rho13_abs * report.rho13_abs);
  // The variance is minimal where the cos^2 factor is unity; pi-periodic.
  double theta = std::fmod(report.phi31 - 0.5 * kDetectionPhase, M_PI);
  if (theta < 0.0) {
    theta += M_PI;
  }
  report.theta_opt = theta;
  return report;
}

bool in_analytic_regime(const SystemParams& p) {
  return p.delta1 == 0.0 && p.delta2 == 0.0 && p.omega1 == p.omega2;
}

double squeezing_parameter_analytic(const SystemParams& p) {
  if (!in_analytic_regime(p)) {
    throw OutsideAnalyticRegime(
        "squeezing_parameter_analytic: requires delta1 = delta2 = 0 and "
        "omega1 = omega2");
  }
  const double o = p.omega1;
  const double o3 = p.omega3;
  const double gsum = p.gamma1 + p.gamma2;
  const double sin_phi = std::sin(p.phi);
  const double cos_2phi = std::cos(2.0 * p.phi);

  const double g = std::pow(o, 4) + std::pow(o3, 4) +
                   o3 * o3 * (gsum * gsum + o * o);
  const double h = 2.0 * o3 * sin_phi * (gsum * o3 * o3 - 2.0 * p.gamma1 * o * o) +
                   3.0 * o * o * o3 * o3 * cos_2phi;
  const double m = 2.0 * std::pow(o, 4) - o * o * o3 * o3 +
                   2.0 * o3 * o3 * (gsum * gsum + o3 * o3) +
                   o * o * o3 *
                       (2.0 * (p.gamma1 - p.gamma2) * sin_phi - 3.0 * o3 * cos_2phi);
  if (m == 0.0) {
    throw Error("squeezing_parameter_analytic: denominator vanished");
  }
  return 4.0 * o * o * o3 * o3 * sin_phi * sin_phi * (g - h) / (m * m);
}

SqueezingReport full_report(const SystemParams& params,
                            const StateVector& psi_ss) {
  SqueezingReport report = squeezing_parameter(psi_ss);
  if (in_analytic_regime(params)) {
    report.f_analytic = squeezing_parameter_analytic(params);
  }
  return report;
}

namespace {

double f_at(const SystemParams& params, double omega3) {
  SystemParams p = params;
  p.omega3 = omega3;
  return squeezing_parameter(steady_state(build_liouvillian(p))).f_numeric;
}

}  // namespace

Omega3Minimum minimize_over_omega3(const SystemParams& params,
                                   double omega3_lo, double omega3_hi,
                                   double grid_step, double tol) {
  if (!(omega3_lo >= 0.0) || !(omega3_hi > omega3_lo)) {
    throw Error("minimize_over_omega3: need 0 <= lo < hi");
  }
  if (!(grid_step > 0.0) || !(tol > 0.0)) {
    throw Error("minimize_over_omega3: grid_step and tol must be positive");
  }

  const int n = static_cast<int>(std::ceil((omega3_hi - omega3_lo) / grid_step));
  int best = 0;
  double f_best = 0.0;
  std::vector<double> grid(n + 1);
  for (int k = 0; k <= n; ++k) {
    grid[k] = std::min(omega3_lo + k * grid_step, omega3_hi);
    const double f = f_at(params, grid[k]);
    if (k == 0 || f < f_best) {
      f_best = f;
      best = k;
    }
  }

  double star = grid[best];
  if (best > 0 && best < n) {
    // Golden-section refinement inside the bracketing cells.
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = grid[best - 1];
    double b = grid[best + 1];
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f_at(params, c);
    double fd = f_at(params, d);
    while (b - a > tol) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - invphi * (b - a);
        fc = f_at(params, c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + invphi * (b - a);
        fd = f_at(params, d);
      }
    }
    star = 0.5 * (a + b);
    f_best = f_at(params, star);
  }

  SystemParams p = params;
  p.omega3 = star;
  const StateVector psi = steady_state(build_liouvillian(p));
  Omega3Minimum out;
  out.omega3_star = star;
  out.f_min = f_best;
  out.rho22 = std::real(psi.rho22());
  out.abs_rho12 = std::abs(psi.rho12());
  return out;
}

std::vector<std::pair<double, double>> sweep_phase(
    const SystemParams& params, const std::vector<double>& phi_grid) {
  std::vector<std::pair<double, double>> out;
  out.reserve(phi_grid.size());
  for (double phi : phi_grid) {
    SystemParams p = params;
    p.phi = normalize_angle(phi);
    const double f =
        squeezing_parameter(steady_state(build_liouvillian(p))).f_numeric;
    out.emplace_back(p.phi, f);
  }
  return out;
}

}  // namespace lsq
