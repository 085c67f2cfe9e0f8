#pragma once

#include <vector>

#include "lsq/liouville.hpp"
#include "lsq/spectrum.hpp"

namespace lsq {

// Eigensystem of the 3x3 rotating-frame Hamiltonian plus the secular
// coherence decay rates between dressed states.
//
// Labeling convention: eigenvalues sorted descending. The bare-state
// amplitudes of dressed state i sit in column i of `coeffs` (row j = bare
// state j), each column unit-norm and mutually orthogonal. `gammas` is the
// symmetric matrix of coherence decay rates; the diagonal is unused.
struct DressedBasis {
  Eigen::Vector3d lambdas = Eigen::Vector3d::Zero();
  Mat3 coeffs = Mat3::Zero();
  Eigen::Matrix3d gammas = Eigen::Matrix3d::Zero();
  SystemParams params{};

  double splitting(int i, int j) const { return lambdas[i] - lambdas[j]; }
  double max_splitting() const { return lambdas[0] - lambdas[2]; }
};

// Rotating-frame Hamiltonian at zero relative detuning, bare basis
// {|1>, |2>, |3>}, in units of gamma2 (hbar = 1).
Mat3 hamiltonian(const SystemParams& params);

// Adjugate-column form of the eigenvector belonging to eigenvalue `lambda`,
// normalized to unit norm. Valid for simple eigenvalues.
Vec3 closed_form_coefficients(const SystemParams& params, double lambda);

// Throws DegenerateSpectrum if two eigenvalues coincide within 1e-9.
DressedBasis diagonalize(const SystemParams& params);

// Secular decay rate of the (i, j) dressed coherence, i != j. Uses the
// gauge-invariant complex form that reduces to the real-coefficient
// expression when the Hamiltonian is real.
double coherence_decay(const DressedBasis& basis, int i, int j,
                       const SystemParams& params);

// Diagonal of the density matrix transformed into the dressed basis.
Eigen::Vector3d dressed_populations(const DressedBasis& basis,
                                    const DensityMatrix& rho);

// Secular sideband approximation: one Lorentzian pair per ordered pair of
// dressed states, weighted by the dressed populations. Valid in the
// high-field regime; warns on stderr when min(Rabi)/max(decay) <= 5.
SpectrumResult lorentzian_spectrum(const DressedBasis& basis,
                                   const Eigen::Vector3d& populations,
                                   const std::vector<double>& omega_grid);

}  // namespace lsq
