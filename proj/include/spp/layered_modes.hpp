#pragma once

#include <array>
#include <complex>
#include <limits>
#include <vector>

#include "spp/materials.hpp"

namespace spp {

using cdouble = std::complex<double>;

/// One exponential segment of a piecewise TM field profile:
///   E(z) = (amp_x, amp_z) * exp(rate * (z - z_ref))   for z in [z0, z1].
/// z1 may be +inf (then Re(rate) < 0) and z0 may be -inf (then Re(rate) > 0).
/// `eps` is the permittivity of the layer the segment lives in; it is carried
/// so boundary conditions (E_x continuous, eps*E_z continuous) can be checked.
struct ProfilePiece {
  double z0;
  double z1;
  double z_ref;
  cdouble amp_x;
  cdouble amp_z;
  cdouble rate;  // [1/m]
  cdouble eps;
};

struct ModeProfile {
  std::vector<ProfilePiece> pieces;
  double norm = 0.0;  // L2 norm over the profile support

  /// Field value at z (0 outside the support).
  void eval(double z, cdouble& ex, cdouble& ez) const;

  /// Largest relative boundary-condition mismatch across internal interfaces.
  double boundary_residual() const;
};

/// Reflection r and transmission-into-stack tau, jointly rescaled so that
/// |r|^2 + |tau|^2 = 1 (ratio and phases preserved).
struct FresnelPair {
  cdouble r;
  cdouble tau;
};

enum class MetalResponse { Lossless, Lossy };

/// Two-sided SPP profile about the II/III interface at z = d.
/// x-amplitude is i on both sides; z-amplitudes are -k/nu (decaying side) and
/// +k/nu0 (growing side), swapped between Otto and KR. Norm is analytic:
/// (1 + k^2/nu^2)/(2 nu) + (1 + k^2/nu0^2)/(2 nu0).
ModeProfile spp_profile(const PermittivityModel& metal, double omega, const LayerStack& stack);

struct ThreeLayerResult {
  ModeProfile psi;                // layers II and III, support [0, inf)
  FresnelPair fresnel;            // rescaled
  cdouble r_raw;                  // reflected amplitude, H-field convention
  cdouble tau_raw;                // transmitted amplitude at z = d, H-field convention
  // E-field coefficients: layer II x: phi[0] e^{-g2 z} + phi[1] e^{+g2 (z-d)},
  // layer II z: phi[2], phi[3] likewise; layer III: (phi[4], phi[5]) e^{-g3 (z-d)}.
  std::array<cdouble, 6> phi;
  bool degenerate_normal_incidence = false;  // theta == 0: no in-plane matching possible
};

/// Solves the TM boundary-value problem for a unit-amplitude plane wave
/// incident from the prism at angle theta. gamma_i = sqrt(kappa^2 - eps_i w^2/c^2)
/// with Re(gamma) >= 0. Amplitudes are scaled so only decaying exponentials in
/// d appear; no overflow for large d.
ThreeLayerResult three_layer_profile(const LayerStack& stack, double omega, double theta,
                                     MetalResponse response);

/// Unit-normalized inner product  int dz  conj(phi_hat) . psi_hat  over the
/// intersection of the two supports. |overlap| <= 1.
cdouble overlap(const ModeProfile& a, const ModeProfile& b);

/// L2 norm over [lo, hi] by adaptive quadrature (test oracle; the profile
/// norms themselves are closed-form).
double profile_norm_quadrature(const ModeProfile& p, double lo, double hi, double tol);

}  // namespace spp
