#pragma once

#include "lsq/params.hpp"
#include "lsq/types.hpp"

namespace lsq {

// Component order of the coherence vector. rho33 is eliminated through the
// unit trace, which is what produces the constant drive terms in the
// optical-coherence rows.
enum PsiIndex : int {
  kRho11 = 0,
  kRho22 = 1,
  kRho12 = 2,
  kRho21 = 3,
  kRho13 = 4,
  kRho31 = 5,
  kRho23 = 6,
  kRho32 = 7,
};

struct StateVector {
  Vec8 psi = Vec8::Zero();

  complexd rho11() const { return psi[kRho11]; }
  complexd rho22() const { return psi[kRho22]; }
  complexd rho33() const { return 1.0 - psi[kRho11] - psi[kRho22]; }
  complexd rho12() const { return psi[kRho12]; }
  complexd rho13() const { return psi[kRho13]; }
  complexd rho23() const { return psi[kRho23]; }

  // Largest violation of psi[ji] == conj(psi[ij]) and of real populations.
  double pairing_error() const;
};

// 3x3 density matrix reconstructed from a StateVector.
struct DensityMatrix {
  Mat3 rho = Mat3::Zero();
};

// d/dt psi = L psi + drive. L is time independent once the relative
// detuning of the closed loop vanishes, which make_params guarantees.
struct LiouvilleSystem {
  Mat8 L = Mat8::Zero();
  Vec8 drive = Vec8::Zero();
  SystemParams params{};
};

LiouvilleSystem build_liouvillian(const SystemParams& params);

// Condition-number cap beyond which the steady-state solve is refused.
inline constexpr double kConditionCap = 1e12;

// psi(inf) = -L^{-1} drive. Throws SingularLiouvillian when cond(L) exceeds
// kConditionCap (undriven or otherwise degenerate configurations).
StateVector steady_state(const LiouvilleSystem& sys);

// Classical fixed-step 4th-order integration of the affine system up to
// t_final. Throws StepSizeTooLarge if dt * (spectral radius of L) is outside
// the stability region.
StateVector evolve(const LiouvilleSystem& sys, const StateVector& psi0,
                   double t_final, double dt = 1e-3);

// Hermitian unit-trace 3x3 matrix; off-diagonal pairs are symmetrized.
// Throws NotHermitian if conjugate pairing is violated beyond `tol`.
DensityMatrix to_density_matrix(const StateVector& psi, double tol = 1e-8);

}  // namespace lsq
