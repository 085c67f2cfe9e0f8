#include "lsq/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "lsq/errors.hpp"

namespace lsq {

namespace {

inline constexpr double kResolventRcondFloor = 1e-12;

void check_grid(const std::vector<double>& omega_grid) {
  if (omega_grid.empty()) {
    throw Error("spectrum: omega grid is empty");
  }
  for (std::size_t k = 0; k < omega_grid.size(); ++k) {
    if (!std::isfinite(omega_grid[k])) {
      throw Error("spectrum: omega grid contains a non-finite value");
    }
    if (k > 0 && !(omega_grid[k] > omega_grid[k - 1])) {
      throw Error("spectrum: omega grid must be strictly increasing");
    }
  }
}

}  // namespace

CovarianceVector equal_time_covariances(const StateVector& psi_ss) {
  // Operator products collapse as A_ij A_31 = delta_j3 A_i1, so each
  // component is delta_j3 <A_i1> - <A_ij><A_31>, with all means read off
  // the stationary coherence vector (<A_mn> = rho_nm).
  const Vec8& s = psi_ss.psi;
  const complexd a31 = s[kRho13];  // <A_31>
  CovarianceVector u;
  u[kRho11] = -s[kRho11] * a31;                  // A_11 term
  u[kRho22] = -s[kRho22] * a31;                  // A_22
  u[kRho12] = -s[kRho12] * a31;                  // A_21
  u[kRho21] = -s[kRho21] * a31;                  // A_12
  u[kRho13] = -a31 * a31;                        // A_31: product vanishes
  u[kRho31] = s[kRho11] - s[kRho31] * a31;       // A_13: product is A_11
  u[kRho23] = -s[kRho23] * a31;                  // A_32
  u[kRho32] = s[kRho12] - s[kRho32] * a31;       // A_23: product is A_21
  return u;
}

namespace {

Eigen::PartialPivLU<Mat8> factor_shifted(const Mat8& L, complexd shift) {
  Mat8 A = -L;
  A.diagonal().array() += shift;
  Eigen::PartialPivLU<Mat8> lu(A);
  if (!(lu.rcond() > kResolventRcondFloor)) {
    throw ResolventSingular(
        "resolvent: (i*omega - L) is numerically singular; the generator is "
        "marginally stable at this frequency");
  }
  return lu;
}

}  // namespace

Mat8 resolvent(const LiouvilleSystem& sys, double omega) {
  const auto lu_plus = factor_shifted(sys.L, iu * omega);
  const auto lu_minus = factor_shifted(sys.L, -iu * omega);
  return lu_plus.inverse() + lu_minus.inverse();
}

SpectrumResult squeezing_spectrum(const LiouvilleSystem& sys,
                                  const StateVector& psi_ss,
                                  QuadraturePhase theta,
                                  const std::vector<double>& omega_grid) {
  check_grid(omega_grid);
  const CovarianceVector u = equal_time_covariances(psi_ss);
  const complexd quad_phase =
      std::polar(1.0, 2.0 * theta.theta + kDetectionPhase);

  SpectrumResult result;
  result.theta = theta;
  result.omegas = omega_grid;
  result.values.resize(omega_grid.size());

  for (std::size_t k = 0; k < omega_grid.size(); ++k) {
    const double w = omega_grid[k];
    const auto lu_plus = factor_shifted(sys.L, iu * w);
    const auto lu_minus = factor_shifted(sys.L, -iu * w);
    const Vec8 mu = lu_plus.solve(u) + lu_minus.solve(u);
    const complexd assembled =
        kDetectionPrefactor * (quad_phase * mu[kRho13] + mu[kRho31]);
    result.values[k] = std::real(assembled);
    result.max_im_residual =
        std::max(result.max_im_residual, std::abs(std::imag(assembled)));
  }
  return result;
}

SpectrumResult time_domain_spectrum_oracle(const LiouvilleSystem& sys,
                                           const StateVector& psi_ss,
                                           QuadraturePhase theta,
                                           const std::vector<double>& omega_grid,
                                           const OracleOptions& opts) {
  check_grid(omega_grid);
  if (!(opts.dtau > 0.0)) {
    throw Error("oracle: dtau must be positive");
  }

  SpectrumResult result;
  result.theta = theta;
  result.omegas = omega_grid;
  result.values.assign(omega_grid.size(), 0.0);

  const CovarianceVector u0 = equal_time_covariances(psi_ss);
  const double u0_norm = u0.cwiseAbs().maxCoeff();
  if (u0_norm == 0.0) {
    return result;  // dark state: nothing fluoresces
  }

  Eigen::ComplexEigenSolver<Mat8> es(sys.L, /*computeEigenvectors=*/false);
  const double slowest = es.eigenvalues().real().cwiseAbs().minCoeff();
  if (es.eigenvalues().real().maxCoeff() >= 0.0 || slowest == 0.0) {
    throw HorizonTooShort(
        "oracle: generator is not strictly stable; correlations do not decay");
  }
  // Demand an extra decade over the decay threshold so a mildly non-normal
  // transient cannot defeat the horizon check.
  const double horizon = opts.horizon > 0.0
                             ? opts.horizon
                             : std::log(10.0 / opts.decay_threshold) / slowest;
  const auto n_steps = static_cast<std::size_t>(std::ceil(horizon / opts.dtau));
  const double h = opts.dtau;

  const complexd quad_phase =
      std::polar(1.0, 2.0 * theta.theta + kDetectionPhase);

  // Regression in tau: dU/dtau = L U from the equal-time vector. Only the
  // two optical-coherence components enter the assembly; record them.
  std::vector<complexd> corr(n_steps + 1);
  const Mat8& L = sys.L;
  Vec8 u = u0;
  corr[0] = quad_phase * u[kRho13] + u[kRho31];
  for (std::size_t k = 1; k <= n_steps; ++k) {
    const Vec8 k1 = L * u;
    const Vec8 k2 = L * (u + 0.5 * h * k1);
    const Vec8 k3 = L * (u + 0.5 * h * k2);
    const Vec8 k4 = L * (u + h * k3);
    u += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    corr[k] = quad_phase * u[kRho13] + u[kRho31];
  }
  if (u.cwiseAbs().maxCoeff() / u0_norm > opts.decay_threshold) {
    throw HorizonTooShort(
        "oracle: correlation has not decayed below threshold at the horizon");
  }

  // Trapezoidal Fourier transform with the symmetric two-sided kernel,
  // exp(i w tau) + exp(-i w tau) = 2 cos(w tau). The phasor is advanced
  // incrementally and re-seeded periodically to stop rounding drift.
  constexpr std::size_t kReseed = 4096;
  for (std::size_t j = 0; j < omega_grid.size(); ++j) {
    const double w = omega_grid[j];
    const complexd rot = std::polar(1.0, w * h);
    complexd phase = 1.0;
    complexd acc = 0.5 * corr[0] * 2.0;
    for (std::size_t k = 1; k <= n_steps; ++k) {
      phase = (k % kReseed == 0) ? std::polar(1.0, w * h * double(k))
                                 : phase * rot;
      const double weight = (k == n_steps) ? 0.5 : 1.0;
      acc += weight * 2.0 * std::real(phase) * corr[k];
    }
    acc *= h;
    result.values[j] = std::real(acc);
    result.max_im_residual =
        std::max(result.max_im_residual, std::abs(std::imag(acc)));
  }
  return result;
}

std::vector<double> default_omega_grid(double max_level_splitting, int points) {
  if (points < 2) {
    throw Error("default_omega_grid: need at least 2 points");
  }
  if (!(max_level_splitting >= 0.0) || !std::isfinite(max_level_splitting)) {
    throw Error("default_omega_grid: invalid splitting");
  }
  const double half_width = 1.5 * std::max(max_level_splitting, 1.0);
  std::vector<double> grid(points);
  for (int k = 0; k < points; ++k) {
    grid[k] = -half_width + 2.0 * half_width * k / (points - 1);
  }
  return grid;
}

}  // namespace lsq
