#pragma once

#include <cmath>

#include "fscat/common.hpp"

namespace fscat {

// Physical constants of the model. Units: hbar = 1, both masses 1/2, so the
// neutron kinetic energy is |k|^2 and the oscillator levels are omega*|n|.
struct ModelParams {
  double omega = 1.0;   // oscillator frequency (energy)
  double lambda = 10.0; // renormalization point; Gamma(-lambda) is the reference operator
  double alpha = 1.0;   // inverse two-body scattering-length parameter (1/length)

  // set only after the Gamma(-lambda)+alpha positivity check has passed
  bool lambda_validated = false;

  void validate() const {
    if (!(omega > 0.0)) throw InvalidArgument("ModelParams: omega must be > 0");
    if (!(lambda > 0.0)) throw InvalidArgument("ModelParams: lambda must be > 0");
    if (!std::isfinite(alpha)) throw InvalidArgument("ModelParams: alpha must be finite");
  }
};

// a = 1/(8 pi alpha); 2a is the two-body scattering length.
inline double alpha_to_scattering_length(double alpha) {
  if (alpha == 0.0) throw InvalidArgument("alpha_to_scattering_length: zero input");
  return 1.0 / (8.0 * pi * alpha);
}

inline double scattering_length_to_alpha(double a) {
  if (a == 0.0) throw InvalidArgument("scattering_length_to_alpha: zero input");
  return 1.0 / (8.0 * pi * a);
}

// Thresholds sit at mu/omega in N_0; the default policy rejects energies
// inside a small window around them (boundary values need stronger weights
// exactly at thresholds).
inline bool near_threshold(double mu, double omega, double window) {
  if (mu < -window * omega) return false;
  double t = mu / omega;
  return std::abs(t - std::round(t)) <= window;
}

}  // namespace fscat
