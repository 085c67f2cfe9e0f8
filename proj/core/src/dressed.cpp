#include "lsq/dressed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <Eigen/Eigenvalues>

#include "lsq/errors.hpp"

namespace lsq {

Mat3 hamiltonian(const SystemParams& p) {
  const complexd o3 = p.omega3 * std::polar(1.0, p.phi);
  Mat3 H;
  H << complexd(-p.delta1), complexd(-p.omega2), complexd(-p.omega1),
      complexd(-p.omega2), complexd(-(p.delta1 - p.delta2)), -o3,
      complexd(-p.omega1), -std::conj(o3), complexd(0.0);
  return H;
}

Vec3 closed_form_coefficients(const SystemParams& p, double lambda) {
  const complexd o3c = p.omega3 * std::polar(1.0, -p.phi);
  Vec3 a;
  a[0] = lambda * p.omega2 - p.omega1 * o3c;
  a[1] = p.omega1 * p.omega1 - lambda * (p.delta1 + lambda);
  a[2] = (p.delta1 + lambda) * o3c - p.omega1 * p.omega2;
  const double n = a.norm();
  const double scale = std::max({std::abs(lambda), p.omega1, p.omega2,
                                 p.omega3, std::abs(p.delta1), 1.0});
  if (n < 1e-12 * scale * scale) {
    throw DegenerateSpectrum(
        "closed_form_coefficients: adjugate column vanished; eigenvalue is "
        "not simple");
  }
  return a / n;
}

inline constexpr double kDegeneracyGap = 1e-9;

DressedBasis diagonalize(const SystemParams& p) {
  Eigen::SelfAdjointEigenSolver<Mat3> solver(hamiltonian(p));
  if (solver.info() != Eigen::Success) {
    throw Error("diagonalize: eigensolver failed");
  }

  DressedBasis basis;
  basis.params = p;
  // SelfAdjointEigenSolver sorts ascending; flip to descending.
  for (int i = 0; i < 3; ++i) {
    basis.lambdas[i] = solver.eigenvalues()(2 - i);
    basis.coeffs.col(i) = solver.eigenvectors().col(2 - i);
  }
  if (basis.lambdas[0] - basis.lambdas[1] < kDegeneracyGap ||
      basis.lambdas[1] - basis.lambdas[2] < kDegeneracyGap) {
    throw DegenerateSpectrum(
        "diagonalize: dressed eigenvalues coincide within 1e-9");
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) {
        basis.gammas(i, j) = coherence_decay(basis, i, j, p);
      }
    }
  }
  return basis;
}

double coherence_decay(const DressedBasis& basis, int i, int j,
                       const SystemParams& p) {
  if (i == j || i < 0 || j < 0 || i > 2 || j > 2) {
    throw Error("coherence_decay: need two distinct dressed-state indices");
  }
  const complexd a1i = basis.coeffs(0, i), a1j = basis.coeffs(0, j);
  const complexd a2i = basis.coeffs(1, i), a2j = basis.coeffs(1, j);
  const complexd a3i = basis.coeffs(2, i), a3j = basis.coeffs(2, j);
  const double shared = std::norm(a1i) + std::norm(a1j);
  // Cross terms paired so each eigenvector's arbitrary global phase cancels.
  const double g1 =
      shared - 2.0 * std::real(std::conj(a1i) * a1j * a3i * std::conj(a3j));
  const double g2 =
      shared - 2.0 * std::real(std::conj(a1i) * a1j * a2i * std::conj(a2j));
  return g1 * p.gamma1 + g2 * p.gamma2;
}

Eigen::Vector3d dressed_populations(const DressedBasis& basis,
                                    const DensityMatrix& rho) {
  return (basis.coeffs.adjoint() * rho.rho * basis.coeffs)
      .diagonal()
      .real();
}

SpectrumResult lorentzian_spectrum(const DressedBasis& basis,
                                   const Eigen::Vector3d& populations,
                                   const std::vector<double>& omega_grid) {
  const SystemParams& p = basis.params;
  double min_rabi = 0.0;
  for (double o : {p.omega1, p.omega2, p.omega3}) {
    if (o > 0.0) {
      min_rabi = (min_rabi == 0.0) ? o : std::min(min_rabi, o);
    }
  }
  const double max_decay = std::max(p.gamma1, p.gamma2);
  if (!(min_rabi / max_decay > 5.0)) {
    std::fprintf(stderr,
                 "lorentzian_spectrum: warning: min(Rabi)/max(decay) = %.3g "
                 "<= 5; the sideband approximation degrades outside the "
                 "high-field regime\n",
                 min_rabi / max_decay);
  }

  SpectrumResult result;
  result.theta = QuadraturePhase(0.0);
  result.omegas = omega_grid;
  result.values.assign(omega_grid.size(), 0.0);

  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) {
        continue;
      }
      const double gij = basis.gammas(i, j);
      const double w_ji = basis.lambdas[j] - basis.lambdas[i];
      const complexd a1i = basis.coeffs(0, i), a1j = basis.coeffs(0, j);
      const complexd a3i = basis.coeffs(2, i), a3j = basis.coeffs(2, j);
      // Gauge-invariant weight; for real coefficients the (i,j) + (j,i)
      // pair sum reduces to the textbook product form.
      const double weight =
          std::real(std::conj(a3j) * a1i *
                    (std::conj(a3i) * a1j + std::conj(a1i) * a3j)) *
          populations[i];
      if (weight == 0.0 || gij == 0.0) {
        continue;
      }
      for (std::size_t k = 0; k < omega_grid.size(); ++k) {
        const double w = omega_grid[k];
        const double dm = w - w_ji;
        const double dp = w + w_ji;
        result.values[k] +=
            weight * gij *
            (1.0 / (gij * gij + dm * dm) + 1.0 / (gij * gij + dp * dp));
      }
    }
  }
  return result;
}

}  // namespace lsq
