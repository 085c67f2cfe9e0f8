#include "lsq/params.hpp"

#include <cmath>

#include "lsq/errors.hpp"

namespace lsq {

double normalize_angle(double angle) {
  // remainder() lands in [-pi, pi]; fold the lower endpoint onto +pi.
  double wrapped = std::remainder(angle, 2.0 * M_PI);
  if (wrapped <= -M_PI) {
    wrapped = M_PI;
  }
  return wrapped;
}

QuadraturePhase::QuadraturePhase(double angle) : theta(normalize_angle(angle)) {
  if (!std::isfinite(angle)) {
    throw ValidationError("theta", "must be finite");
  }
}

namespace {

void require_finite(const char* name, double value) {
  if (!std::isfinite(value)) {
    throw ValidationError(name, "must be finite");
  }
}

}  // namespace

SystemParams make_params(double gamma1, double gamma2, double delta1,
                         double delta2, double omega1, double omega2,
                         double omega3, double phi) {
  require_finite("gamma1", gamma1);
  require_finite("gamma2", gamma2);
  require_finite("delta1", delta1);
  require_finite("delta2", delta2);
  require_finite("omega1", omega1);
  require_finite("omega2", omega2);
  require_finite("omega3", omega3);
  require_finite("phi", phi);

  if (gamma1 <= 0.0) {
    throw ValidationError("gamma1", "decay rate must be positive");
  }
  if (gamma2 <= 0.0) {
    throw ValidationError("gamma2", "decay rate must be positive");
  }
  if (gamma2 != 1.0) {
    throw ValidationError("gamma2",
                          "gamma2 is the frequency unit and must equal 1");
  }
  if (omega1 < 0.0) {
    throw ValidationError("omega1", "Rabi frequency must be >= 0");
  }
  if (omega2 < 0.0) {
    throw ValidationError("omega2", "Rabi frequency must be >= 0");
  }
  if (omega3 < 0.0) {
    throw ValidationError("omega3", "Rabi frequency must be >= 0");
  }

  SystemParams p;
  p.gamma1 = gamma1;
  p.gamma2 = gamma2;
  p.delta1 = delta1;
  p.delta2 = delta2;
  p.delta3 = delta1 - delta2;
  p.omega1 = omega1;
  p.omega2 = omega2;
  p.omega3 = omega3;
  p.phi = normalize_angle(phi);
  return p;
}

}  // namespace lsq
