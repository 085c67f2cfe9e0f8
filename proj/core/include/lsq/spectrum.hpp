#pragma once

#include <vector>

#include "lsq/liouville.hpp"

namespace lsq {

// Equal-time covariances of operator deviations against Delta A_31, ordered
// so that component k pairs with the k-th element of the coherence vector.
using CovarianceVector = Vec8;

CovarianceVector equal_time_covariances(const StateVector& psi_ss);

// Sum of the two resolvents (i*omega - L)^{-1} + (-i*omega - L)^{-1}.
// Even in omega; at omega = 0 it reduces to -2 L^{-1}.
// Throws ResolventSingular when either factor is numerically singular.
Mat8 resolvent(const LiouvilleSystem& sys, double omega);

// Squeezing spectrum samples in units of |mu13|^2 f(r)^2 / (pi gamma2).
// Negative values certify spectral squeezing of the selected quadrature.
// The complex regression assembly carries a genuine imaginary part (the two
// squared-quadrature terms only merge under the final real part);
// max_im_residual records its largest magnitude as a diagnostic.
struct SpectrumResult {
  QuadraturePhase theta;
  std::vector<double> omegas;
  std::vector<double> values;
  double max_im_residual = 0.0;
};

SpectrumResult squeezing_spectrum(const LiouvilleSystem& sys,
                                  const StateVector& psi_ss,
                                  QuadraturePhase theta,
                                  const std::vector<double>& omega_grid);

struct OracleOptions {
  double dtau = 2.5e-4;          // trapezoid step of the tau integration
  double horizon = 0.0;          // 0: chosen from the slowest decay mode of L
  double decay_threshold = 1e-8; // required |U(T)| / |U(0)| at the horizon
};

// Cross-validation path: propagates the two-time covariance vector in tau
// with the same generator and Fourier-integrates numerically. Agrees with
// squeezing_spectrum to ~1e-3 relative at the defaults.
// Throws HorizonTooShort if the correlation has not decayed at the horizon.
SpectrumResult time_domain_spectrum_oracle(const LiouvilleSystem& sys,
                                           const StateVector& psi_ss,
                                           QuadraturePhase theta,
                                           const std::vector<double>& omega_grid,
                                           const OracleOptions& opts = {});

// Uniform grid of `points` samples over +-1.5 * max_level_splitting,
// wide enough to contain every sideband pair.
std::vector<double> default_omega_grid(double max_level_splitting,
                                       int points = 2001);

}  // namespace lsq
