#pragma once

#include "spp/materials.hpp"

namespace spp {

/// Bound-mode wavevector data at one frequency.
///
/// k solves w^2 = c^2 k^2 (eps_m + 1)/eps_m, i.e. k = (w/c) sqrt(eps_m/(1+eps_m)).
/// nu, nu0 are the metal- and air-side decay constants, kappa is the
/// per-unit-length field loss rate (half the intensity loss rate 2*kappa).
struct SppWavevector {
  double k;      // [rad/m]
  double kappa;  // [1/m], 0 for the lossless evaluation
  double nu;     // [1/m]
  double nu0;    // [1/m]
};

/// Photon line kappa_parallel = sqrt(eps1) (w/c) sin(theta) at the matching angle.
struct MatchCondition {
  double theta;           // [rad]
  double omega;           // [rad/s]
  double kappa_parallel;  // [rad/m]
};

SppWavevector spp_wavevector_lossless(const PermittivityModel& metal, double omega);
SppWavevector spp_wavevector_lossy(const PermittivityModel& metal, double omega);

/// theta = asin( sqrt(eps_m / (eps1 (1+eps_m))) ), lossless eps_m.
/// Throws no_solution_error when the arcsine argument exceeds 1 (prism index
/// too low at this frequency).
MatchCondition matching_angle(const PermittivityModel& metal, double eps1, double omega);

/// d(omega)/dk of the lossless dispersion by central difference, h = 1e-6*omega0.
double group_velocity(const PermittivityModel& metal, double omega0);

/// Largest frequency with eps_m < -1 and a matchable angle for this prism,
/// i.e. the upper edge of the sweepable range. Bisection to relative 1e-12.
double max_matchable_omega(const PermittivityModel& metal, double eps1);

bool is_bound_mode(const PermittivityModel& metal, double omega);
bool is_matchable(const PermittivityModel& metal, double eps1, double omega);

}  // namespace spp
