#pragma once

#include <cmath>
#include <random>

#include "lsq/liouville.hpp"
#include "lsq/params.hpp"
#include "lsq/types.hpp"

namespace lsq::test {

// Independent transcription of the five density-matrix equations of motion
// (with rho33 eliminated through the unit trace and the conjugate rows
// obtained by conjugation). Deliberately does NOT go through
// build_liouvillian: it is the oracle that the matrix form is checked
// against.
inline Vec8 direct_rhs(const SystemParams& p, const Vec8& s) {
  const complexd r11 = s[kRho11], r22 = s[kRho22];
  const complexd r12 = s[kRho12], r21 = s[kRho21];
  const complexd r13 = s[kRho13], r31 = s[kRho31];
  const complexd r23 = s[kRho23], r32 = s[kRho32];
  const complexd r33 = 1.0 - r11 - r22;
  const complexd e = std::polar(1.0, p.phi);
  const complexd ec = std::conj(e);
  const double G = p.gamma1 + p.gamma2;

  const complexd d11 = -2.0 * G * r11 + iu * p.omega1 * r31 +
                       iu * p.omega2 * r21 - iu * p.omega1 * r13 -
                       iu * p.omega2 * r12;
  const complexd d22 = 2.0 * p.gamma2 * r11 + iu * p.omega2 * r12 +
                       iu * p.omega3 * e * r32 - iu * p.omega2 * r21 -
                       iu * p.omega3 * ec * r23;
  const complexd d12 = -(G - iu * p.delta2) * r12 +
                       iu * p.omega2 * (r22 - r11) + iu * p.omega1 * r32 -
                       iu * p.omega3 * ec * r13;
  const complexd d13 = -(G - iu * p.delta1) * r13 +
                       iu * p.omega1 * (r33 - r11) + iu * p.omega2 * r23 -
                       iu * p.omega3 * e * r12;
  const complexd d23 = iu * (p.delta1 - p.delta2) * r23 +
                       iu * p.omega3 * e * (r33 - r22) - iu * p.omega1 * r21 +
                       iu * p.omega2 * r13;

  Vec8 out;
  out[kRho11] = d11;
  out[kRho22] = d22;
  out[kRho12] = d12;
  out[kRho21] = std::conj(d12);
  out[kRho13] = d13;
  out[kRho31] = std::conj(d13);
  out[kRho23] = d23;
  out[kRho32] = std::conj(d23);
  return out;
}

// Time derivative of rho33 transcribed directly (for trace conservation).
inline complexd direct_rhs_rho33(const SystemParams& p, const Vec8& s) {
  const complexd e = std::polar(1.0, p.phi);
  return 2.0 * p.gamma1 * s[kRho11] +
         iu * p.omega1 * (s[kRho13] - s[kRho31]) +
         iu * p.omega3 * (std::conj(e) * s[kRho23] - e * s[kRho32]);
}

inline SystemParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> gamma(0.05, 20.0);
  std::uniform_real_distribution<double> delta(-20.0, 20.0);
  std::uniform_real_distribution<double> rabi(0.5, 30.0);
  std::uniform_real_distribution<double> rabi3(0.0, 15.0);
  std::uniform_real_distribution<double> phase(-M_PI, M_PI);
  return make_params(gamma(rng), 1.0, delta(rng), delta(rng), rabi(rng),
                     rabi(rng), rabi3(rng), phase(rng));
}

// Random genuinely physical state: rho = A A^dag normalized to unit trace.
inline StateVector random_physical_state(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat3 a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      a(i, j) = complexd(normal(rng), normal(rng));
    }
  }
  Mat3 rho = a * a.adjoint();
  rho /= rho.trace();

  StateVector psi;
  psi.psi[kRho11] = rho(0, 0);
  psi.psi[kRho22] = rho(1, 1);
  psi.psi[kRho12] = rho(0, 1);
  psi.psi[kRho21] = rho(1, 0);
  psi.psi[kRho13] = rho(0, 2);
  psi.psi[kRho31] = rho(2, 0);
  psi.psi[kRho23] = rho(1, 2);
  psi.psi[kRho32] = rho(2, 1);
  return psi;
}

inline SystemParams fig2_params(double phi, double omega3 = 10.0) {
  return make_params(0.1, 1.0, 15.0, -15.0, 30.0, 30.0, omega3, phi);
}

inline SystemParams fig3_params(double phi, double omega3) {
  return make_params(20.0, 1.0, 0.0, 0.0, 8.0, 8.0, omega3, phi);
}

inline std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int k = 0; k < n; ++k) {
    out[k] = lo + (hi - lo) * k / (n - 1);
  }
  return out;
}

}  // namespace lsq::test
