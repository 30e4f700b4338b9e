#pragma once

#include <complex>
#include <utility>

#include "spp/dispersion.hpp"
#include "spp/layered_modes.hpp"
#include "spp/materials.hpp"

namespace spp {

/// Transfer-matrix coefficients at one frequency.
/// alpha = cos(Theta) (real, >= 0), beta = e^{i Phi} sin(Theta),
/// g = e^{i Phi} Theta, |g_tilde| = (2/pi) |g| in [0, 1].
struct TransferCoefficients {
  cdouble alpha;
  cdouble beta;
  double theta_mix;    // Theta in [0, pi/2]
  double phi_mix;      // Phi in [0, 2 pi)
  cdouble g;
  double g_tilde;
  double penetration;  // P = 2/(nu0 d) Otto, 2/(nu d) KR

  static TransferCoefficients from_beta(cdouble beta, double penetration);
};

/// Coupling at the mode-matched angle: beta = -conj(tau * overlap(phi_hat, psi_hat)),
/// with tau from the three-layer solve (lossy metal response) and both mode
/// profiles normalized to unit L2 norm. The SPP side and the matching angle
/// use the lossless permittivity.
TransferCoefficients transfer_coefficients(const LayerStack& stack, double omega);

double penetration_factor(const LayerStack& stack, double omega);

struct ThicknessRange {
  double lo;
  double hi;
};

/// Maximize |g_tilde| over d in d_range subject to P <= 1. Coarse log-spaced
/// scan (32 points) to bracket, then golden-section refinement. Deterministic.
std::pair<double, TransferCoefficients> optimize_thickness(const LayerStack& stack_template,
                                                           double omega,
                                                           ThicknessRange d_range);

/// Wavepacket deformation across the band [w0 - 2 sigma, w0 + 2 sigma], where
/// sigma = FWHM / (2 sqrt(2 ln 2)) and FWHM = w0^2 delta_lambda / (2 pi c),
/// evaluated at fixed d = argmax |g_tilde(w0)|. If an edge exits the matchable
/// range the band is clamped and `partial_band` is set.
struct DeformationReport {
  double delta_theta_deg;       // |theta(w+) - theta(w-)| [deg]
  double delta_g_mag;           // |g(w+) - g(w-)|, complex end-to-end spread
  double delta_g_modulus_spread;  // max - min of |g(w)| over the band
  double bandwidth_lambda;      // input delta_lambda [m]
  double omega0;
  double omega_lo;              // clamped band edges actually used
  double omega_hi;
  double d_used;
  bool partial_band;
};

DeformationReport deformation_metrics(const LayerStack& stack_template, double omega0,
                                      double delta_lambda, ThicknessRange d_range);

}  // namespace spp
