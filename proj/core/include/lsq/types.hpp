#pragma once

#include <complex>

#include <Eigen/Dense>

namespace lsq {

using complexd = std::complex<double>;

// Dense fixed-size types; the whole model lives in an 8-dimensional
// coherence space plus a 3x3 Hamiltonian.
using Vec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3cd;
using Vec8 = Eigen::Matrix<complexd, 8, 1>;
using Mat8 = Eigen::Matrix<complexd, 8, 8>;

inline constexpr complexd iu{0.0, 1.0};

}  // namespace lsq
