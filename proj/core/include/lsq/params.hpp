#pragma once

namespace lsq {

// Every frequency-like quantity (decay rates, Rabi frequencies, detunings,
// spectral variables) is expressed in units of gamma2, which is therefore
// fixed to 1. Spontaneous emission channels |1>->|3> and |1>->|2> have rates
// 2*gamma1 and 2*gamma2.
//
// The detection-geometry prefactor |mu13|^2 f(r)^2 and the propagation phase
// exp(2i(-phi1 + omega1 r/c)) are fixed to unity; outputs are directly in the
// scaled units used throughout.
inline constexpr double kDetectionPrefactor = 1.0;
inline constexpr double kDetectionPhase = 0.0;  // the 2(-phi1 + omega1 r/c) angle

struct SystemParams {
  double gamma1;  // |1>->|3> decay parameter, > 0
  double gamma2;  // |1>->|2> decay parameter, the frequency unit (== 1)
  double delta1;  // detuning of the field on |1><->|3>
  double delta2;  // detuning of the field on |1><->|2>
  double delta3;  // detuning of the low-frequency field; derived = delta1 - delta2
  double omega1;  // Rabi frequency on |1><->|3>, >= 0
  double omega2;  // Rabi frequency on |1><->|2>, >= 0
  double omega3;  // Rabi frequency on |2><->|3>, >= 0
  double phi;     // relative phase phi1 - phi2 - phi3, stored in (-pi, pi]
};

// Quadrature selection angle for the homodyne spectrum, stored in (-pi, pi].
struct QuadraturePhase {
  QuadraturePhase() = default;
  explicit QuadraturePhase(double angle);
  double theta = 0.0;
};

// Wraps an angle to (-pi, pi]. Idempotent.
double normalize_angle(double angle);

// Validates and assembles parameters. delta3 is not an input: the closed
// loop is only treated at zero relative detuning, so delta3 = delta1 - delta2.
// Throws ValidationError on non-finite input, non-positive decay rates,
// gamma2 != 1, or negative Rabi frequencies.
SystemParams make_params(double gamma1, double gamma2, double delta1,
                         double delta2, double omega1, double omega2,
                         double omega3, double phi);

}  // namespace lsq
