#include <cmath>
#include <random>

#include <doctest.h>

#include "helpers.hpp"
#include "lsq/dressed.hpp"
#include "lsq/errors.hpp"
#include "lsq/spectrum.hpp"

using namespace lsq;
using namespace lsq::test;

TEST_SUITE_BEGIN("dressed");

TEST_CASE("strong-field eigenvalues of the reference configurations") {
  SUBCASE("in-phase loop") {
    const DressedBasis basis = diagonalize(fig2_params(0.0));
    CHECK(basis.lambdas[0] == doctest::Approx(26.07).epsilon(0.0004));
    CHECK(basis.lambdas[1] == doctest::Approx(-6.21).epsilon(0.002));
    CHECK(basis.lambdas[2] == doctest::Approx(-64.86).epsilon(0.0002));
  }
  SUBCASE("opposite-phase loop") {
    const DressedBasis basis = diagonalize(fig2_params(M_PI));
    CHECK(basis.lambdas[0] == doctest::Approx(34.86).epsilon(0.0003));
    CHECK(basis.lambdas[1] == doctest::Approx(-23.79).epsilon(0.0005));
    CHECK(basis.lambdas[2] == doctest::Approx(-56.07).epsilon(0.0002));
  }
  SUBCASE("ground coupling off") {
    const DressedBasis basis = diagonalize(fig2_params(0.0, 0.0));
    CHECK(std::abs(basis.lambdas[0] - 30.0) <= 1e-9);
    CHECK(std::abs(basis.lambdas[1] + 15.0) <= 1e-9);
    CHECK(std::abs(basis.lambdas[2] + 60.0) <= 1e-9);
  }
}

TEST_CASE("eigenvalue sum matches the Hamiltonian trace") {
  std::mt19937_64 rng(301);
  for (int k = 0; k < 300; ++k) {
    const SystemParams p = random_params(rng);
    DressedBasis basis;
    try {
      basis = diagonalize(p);
    } catch (const DegenerateSpectrum&) {
      continue;
    }
    CHECK(std::abs(basis.lambdas.sum() + p.delta1 + (p.delta1 - p.delta2)) <=
          1e-10);
  }
}

TEST_CASE("eigenvector residuals and orthonormality") {
  std::mt19937_64 rng(302);
  for (int k = 0; k < 100; ++k) {
    const SystemParams p = random_params(rng);
    DressedBasis basis;
    try {
      basis = diagonalize(p);
    } catch (const DegenerateSpectrum&) {
      continue;
    }
    const Mat3 H = hamiltonian(p);
    for (int i = 0; i < 3; ++i) {
      const Vec3 v = basis.coeffs.col(i);
      CHECK((H * v - basis.lambdas[i] * v).norm() <= 1e-10 * H.norm());
      CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
    }
    CHECK((basis.coeffs.adjoint() * basis.coeffs - Mat3::Identity())
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
  }
}

TEST_CASE("closed-form coefficients agree with the solver up to a phase") {
  std::mt19937_64 rng(303);
  for (int k = 0; k < 100; ++k) {
    const SystemParams p = random_params(rng);
    DressedBasis basis;
    try {
      basis = diagonalize(p);
    } catch (const DegenerateSpectrum&) {
      continue;
    }
    for (int i = 0; i < 3; ++i) {
      Vec3 closed;
      try {
        closed = closed_form_coefficients(p, basis.lambdas[i]);
      } catch (const DegenerateSpectrum&) {
        continue;  // adjugate column can vanish for special parameters
      }
      const Vec3 solver = basis.coeffs.col(i);
      // Align the global phase on the largest component.
      int big = 0;
      for (int j = 1; j < 3; ++j) {
        if (std::abs(closed[j]) > std::abs(closed[big])) {
          big = j;
        }
      }
      const complexd phase = solver[big] / closed[big];
      CHECK(std::abs(std::abs(phase) - 1.0) <= 1e-9);
      CHECK((closed * phase - solver).cwiseAbs().maxCoeff() <= 1e-9);
    }
  }
}

TEST_CASE("a degenerate spectrum is refused") {
  CHECK_THROWS_AS(diagonalize(make_params(1.0, 1.0, 0, 0, 0, 0, 0, 0)),
                  DegenerateSpectrum);
}

TEST_CASE("coherence decay rates are symmetric and non-negative") {
  std::mt19937_64 rng(304);
  for (int k = 0; k < 200; ++k) {
    const SystemParams p = random_params(rng);
    DressedBasis basis;
    try {
      basis = diagonalize(p);
    } catch (const DegenerateSpectrum&) {
      continue;
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) {
          CHECK(basis.gammas(i, j) == 0.0);
        } else {
          CHECK(basis.gammas(i, j) == doctest::Approx(basis.gammas(j, i))
                                           .epsilon(1e-12));
          CHECK(basis.gammas(i, j) >= 0.0);
        }
      }
    }
  }
  const DressedBasis basis = diagonalize(fig2_params(0.0));
  CHECK_THROWS_AS(coherence_decay(basis, 1, 1, basis.params), Error);
}

TEST_CASE("no excited admixture, no coherence decay") {
  // Both optical drives off: two dressed states are pure ground mixtures.
  const SystemParams p = make_params(1.0, 1.0, -50.0, -50.0, 0.0, 0.0, 5.0, 0.7);
  const DressedBasis basis = diagonalize(p);
  CHECK(basis.lambdas[0] == doctest::Approx(50.0));
  CHECK(std::abs(basis.coeffs(0, 1)) <= 1e-12);
  CHECK(std::abs(basis.coeffs(0, 2)) <= 1e-12);
  CHECK(basis.gammas(1, 2) <= 1e-12);
}

TEST_CASE("real-coefficient case reduces to the textbook expression") {
  const SystemParams p = fig2_params(0.0);  // real Hamiltonian
  const DressedBasis basis = diagonalize(p);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(std::imag(basis.coeffs(i, j))) <= 1e-12);
    }
  }
  auto real_gamma = [&](int i, int j) {
    const double a1a = std::real(basis.coeffs(0, i));
    const double a1b = std::real(basis.coeffs(0, j));
    const double a2a = std::real(basis.coeffs(1, i));
    const double a2b = std::real(basis.coeffs(1, j));
    const double a3a = std::real(basis.coeffs(2, i));
    const double a3b = std::real(basis.coeffs(2, j));
    const double g1 = a1a * a1a + a1b * a1b - 2.0 * a1a * a1b * a3a * a3b;
    const double g2 = a1a * a1a + a1b * a1b - 2.0 * a1a * a1b * a2a * a2b;
    return g1 * p.gamma1 + g2 * p.gamma2;
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) {
        CHECK(basis.gammas(i, j) ==
              doctest::Approx(real_gamma(i, j)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("basis is 2-pi periodic in the phase and phase-free without the "
          "ground coupling") {
  const SystemParams p = fig2_params(0.7);
  SystemParams shifted = p;
  shifted.phi = normalize_angle(p.phi + 2.0 * M_PI);
  const DressedBasis a = diagonalize(p);
  const DressedBasis b = diagonalize(shifted);
  CHECK((a.lambdas - b.lambdas).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((a.coeffs - b.coeffs).cwiseAbs().maxCoeff() <= 1e-12);

  const DressedBasis c = diagonalize(fig2_params(0.0, 0.0));
  const DressedBasis d = diagonalize(fig2_params(2.5, 0.0));
  CHECK((c.lambdas - d.lambdas).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((c.gammas - d.gammas).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("dressed coherence width matches the fitted sideband width") {
  const SystemParams p = fig2_params(0.0);
  const LiouvilleSystem sys = build_liouvillian(p);
  const StateVector psi = steady_state(sys);
  const DressedBasis basis = diagonalize(p);

  // Numeric half-width at half depth of the inner squeezing dip.
  const auto window = linspace(25.0, 40.0, 3001);
  const SpectrumResult s =
      squeezing_spectrum(sys, psi, QuadraturePhase(0.0), window);
  std::size_t dip = 0;
  for (std::size_t k = 0; k < s.values.size(); ++k) {
    if (s.values[k] < s.values[dip]) {
      dip = k;
    }
  }
  const double half = s.values[dip] / 2.0;
  std::size_t lo = dip;
  std::size_t hi = dip;
  while (lo > 0 && s.values[lo] < half) {
    --lo;
  }
  while (hi + 1 < s.values.size() && s.values[hi] < half) {
    ++hi;
  }
  const double fitted_hwhm = 0.5 * (window[hi] - window[lo]);
  const double predicted = basis.gammas(0, 1);
  CHECK(std::abs(predicted - fitted_hwhm) <= 0.15 * predicted);
  CHECK(predicted == doctest::Approx(0.59047).epsilon(1e-4));
}

TEST_CASE("dressed populations are a unit-sum real diagonal") {
  const SystemParams p = fig2_params(0.0);
  const DressedBasis basis = diagonalize(p);
  const StateVector psi = steady_state(build_liouvillian(p));
  const Eigen::Vector3d pops = dressed_populations(basis, to_density_matrix(psi));
  CHECK(pops.sum() == doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 0; i < 3; ++i) {
    CHECK(pops[i] >= 0.0);
    // independent recomputation of <Phi_i| rho |Phi_i>
    const Vec3 v = basis.coeffs.col(i);
    const complexd direct = v.dot(to_density_matrix(psi).rho * v);
    CHECK(pops[i] == doctest::Approx(std::real(direct)).epsilon(1e-12));
  }
  CHECK(pops[0] == doctest::Approx(0.04173).epsilon(2e-3));
  CHECK(pops[1] == doctest::Approx(0.75405).epsilon(2e-3));
  CHECK(pops[2] == doctest::Approx(0.20422).epsilon(2e-3));
}

TEST_CASE("sideband approximation reproduces sign and position") {
  for (double phi : {0.0, M_PI}) {
    const SystemParams p = fig2_params(phi);
    const LiouvilleSystem sys = build_liouvillian(p);
    const StateVector psi = steady_state(sys);
    const DressedBasis basis = diagonalize(p);
    const Eigen::Vector3d pops =
        dressed_populations(basis, to_density_matrix(psi));

    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const double target = basis.splitting(i, j);
        const auto window = linspace(target - 6.0, target + 6.0, 601);
        const SpectrumResult exact =
            squeezing_spectrum(sys, psi, QuadraturePhase(0.0), window);
        const SpectrumResult approx =
            lorentzian_spectrum(basis, pops, window);

        std::size_t ke = 0;
        std::size_t ka = 0;
        for (std::size_t k = 0; k < window.size(); ++k) {
          if (std::abs(exact.values[k]) > std::abs(exact.values[ke])) {
            ke = k;
          }
          if (std::abs(approx.values[k]) > std::abs(approx.values[ka])) {
            ka = k;
          }
        }
        CHECK(std::abs(window[ka] - window[ke]) <= 2.0);
        CHECK(exact.values[ke] * approx.values[ka] > 0.0);  // same sign
      }
    }
  }
}

TEST_CASE("with the coupling off both inner pairs overlap and add to a "
          "non-negative sideband") {
  const SystemParams p = fig2_params(0.0, 0.0);
  const DressedBasis basis = diagonalize(p);
  CHECK(basis.splitting(0, 1) == doctest::Approx(45.0));
  CHECK(basis.splitting(1, 2) == doctest::Approx(45.0));
  const StateVector psi = steady_state(build_liouvillian(p));
  const Eigen::Vector3d pops =
      dressed_populations(basis, to_density_matrix(psi));
  const auto window = linspace(40.0, 50.0, 201);
  const SpectrumResult s = lorentzian_spectrum(basis, pops, window);
  for (double v : s.values) {
    CHECK(v >= 0.0);
  }
}

TEST_CASE("sideband approximation is linear in the populations") {
  const SystemParams p = fig2_params(0.0);
  const DressedBasis basis = diagonalize(p);
  const auto window = linspace(-100.0, 100.0, 101);
  const Eigen::Vector3d pa(0.3, 0.5, 0.2);
  const Eigen::Vector3d pb(0.1, 0.0, 0.9);
  const SpectrumResult sa = lorentzian_spectrum(basis, pa, window);
  const SpectrumResult sb = lorentzian_spectrum(basis, pb, window);
  const SpectrumResult sum = lorentzian_spectrum(basis, pa + pb, window);
  const SpectrumResult zero =
      lorentzian_spectrum(basis, Eigen::Vector3d::Zero(), window);
  for (std::size_t k = 0; k < window.size(); ++k) {
    CHECK(sum.values[k] ==
          doctest::Approx(sa.values[k] + sb.values[k]).epsilon(1e-12));
    CHECK(zero.values[k] == 0.0);
  }
}

TEST_SUITE_END();
