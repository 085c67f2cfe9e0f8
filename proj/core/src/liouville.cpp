#include "lsq/liouville.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "lsq/errors.hpp"

namespace lsq {

double StateVector::pairing_error() const {
  double err = 0.0;
  err = std::max(err, std::abs(std::imag(psi[kRho11])));
  err = std::max(err, std::abs(std::imag(psi[kRho22])));
  err = std::max(err, std::abs(psi[kRho21] - std::conj(psi[kRho12])));
  err = std::max(err, std::abs(psi[kRho31] - std::conj(psi[kRho13])));
  err = std::max(err, std::abs(psi[kRho32] - std::conj(psi[kRho23])));
  return err;
}

LiouvilleSystem build_liouvillian(const SystemParams& p) {
  const double G = p.gamma1 + p.gamma2;
  const complexd e = std::polar(1.0, p.phi);   // exp(+i phi)
  const complexd ec = std::conj(e);
  const complexd i1 = iu * p.omega1;
  const complexd i2 = iu * p.omega2;
  const complexd i3e = iu * p.omega3 * e;
  const complexd i3ec = iu * p.omega3 * ec;

  LiouvilleSystem sys;
  sys.params = p;
  Mat8& L = sys.L;

  // Populations.
  L(kRho11, kRho11) = -2.0 * G;
  L(kRho11, kRho12) = -i2;
  L(kRho11, kRho21) = i2;
  L(kRho11, kRho13) = -i1;
  L(kRho11, kRho31) = i1;

  L(kRho22, kRho11) = 2.0 * p.gamma2;
  L(kRho22, kRho12) = i2;
  L(kRho22, kRho21) = -i2;
  L(kRho22, kRho23) = -i3ec;
  L(kRho22, kRho32) = i3e;

  // Ground-excited coherence rho12 and its conjugate.
  L(kRho12, kRho11) = -i2;
  L(kRho12, kRho22) = i2;
  L(kRho12, kRho12) = -(G - iu * p.delta2);
  L(kRho12, kRho13) = -i3ec;
  L(kRho12, kRho32) = i1;

  L(kRho21, kRho11) = i2;
  L(kRho21, kRho22) = -i2;
  L(kRho21, kRho21) = -(G + iu * p.delta2);
  L(kRho21, kRho31) = i3e;
  L(kRho21, kRho23) = -i1;

  // Optical coherence rho13; eliminating rho33 feeds the populations back
  // in and leaves the constant i*omega1 in the drive vector.
  L(kRho13, kRho11) = -2.0 * i1;
  L(kRho13, kRho22) = -i1;
  L(kRho13, kRho12) = -i3e;
  L(kRho13, kRho13) = -(G - iu * p.delta1);
  L(kRho13, kRho23) = i2;

  L(kRho31, kRho11) = 2.0 * i1;
  L(kRho31, kRho22) = i1;
  L(kRho31, kRho21) = i3ec;
  L(kRho31, kRho31) = -(G + iu * p.delta1);
  L(kRho31, kRho32) = -i2;

  // Ground-state coherence rho23; undamped except through the couplings.
  L(kRho23, kRho11) = -i3e;
  L(kRho23, kRho22) = -2.0 * i3e;
  L(kRho23, kRho21) = -i1;
  L(kRho23, kRho13) = i2;
  L(kRho23, kRho23) = iu * (p.delta1 - p.delta2);

  L(kRho32, kRho11) = i3ec;
  L(kRho32, kRho22) = 2.0 * i3ec;
  L(kRho32, kRho12) = i1;
  L(kRho32, kRho31) = -i2;
  L(kRho32, kRho32) = -iu * (p.delta1 - p.delta2);

  sys.drive[kRho13] = i1;
  sys.drive[kRho31] = -i1;
  sys.drive[kRho23] = i3e;
  sys.drive[kRho32] = -i3ec;
  return sys;
}

StateVector steady_state(const LiouvilleSystem& sys) {
  Eigen::JacobiSVD<Mat8> svd(sys.L);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(7);
  if (!(smin > 0.0) || smax / smin > kConditionCap) {
    throw SingularLiouvillian(
        "steady_state: generator is numerically singular (cond > 1e12); "
        "the stationary state is not unique");
  }
  StateVector out;
  out.psi = sys.L.partialPivLu().solve(-sys.drive);
  return out;
}

namespace {

double spectral_radius(const Mat8& L) {
  Eigen::ComplexEigenSolver<Mat8> es(L, /*computeEigenvectors=*/false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

// Stability interval of the classical 4th-order scheme, with margin.
inline constexpr double kRk4StabilityLimit = 2.5;

StateVector evolve(const LiouvilleSystem& sys, const StateVector& psi0,
                   double t_final, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw Error("evolve: dt must be positive and finite");
  }
  if (t_final < 0.0 || !std::isfinite(t_final)) {
    throw Error("evolve: t_final must be >= 0 and finite");
  }
  if (dt * spectral_radius(sys.L) > kRk4StabilityLimit) {
    throw StepSizeTooLarge("evolve: dt * spectral_radius(L) exceeds the "
                           "stability bound of the fixed-step integrator");
  }

  const Mat8& L = sys.L;
  const Vec8& b = sys.drive;
  Vec8 psi = psi0.psi;
  auto step = [&](double h) {
    const Vec8 k1 = L * psi + b;
    const Vec8 k2 = L * (psi + 0.5 * h * k1) + b;
    const Vec8 k3 = L * (psi + 0.5 * h * k2) + b;
    const Vec8 k4 = L * (psi + h * k3) + b;
    psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };

  const auto n_full = static_cast<long long>(std::floor(t_final / dt));
  for (long long k = 0; k < n_full; ++k) {
    step(dt);
  }
  const double rest = t_final - static_cast<double>(n_full) * dt;
  if (rest > 1e-15 * std::max(1.0, t_final)) {
    step(rest);
  }
  StateVector out;
  out.psi = psi;
  return out;
}

DensityMatrix to_density_matrix(const StateVector& psi, double tol) {
  if (psi.pairing_error() > tol) {
    throw NotHermitian("to_density_matrix: conjugate pairing violated");
  }
  const double r11 = std::real(psi.psi[kRho11]);
  const double r22 = std::real(psi.psi[kRho22]);
  const complexd r12 =
      0.5 * (psi.psi[kRho12] + std::conj(psi.psi[kRho21]));
  const complexd r13 =
      0.5 * (psi.psi[kRho13] + std::conj(psi.psi[kRho31]));
  const complexd r23 =
      0.5 * (psi.psi[kRho23] + std::conj(psi.psi[kRho32]));

  DensityMatrix dm;
  dm.rho << complexd(r11), r12, r13,
      std::conj(r12), complexd(r22), r23,
      std::conj(r13), std::conj(r23), complexd(1.0 - r11 - r22);
  return dm;
}

}  // namespace lsq
