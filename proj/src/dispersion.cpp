#include "spp/dispersion.hpp"

#include <cmath>
#include <complex>

#include "spp/constants.hpp"
#include "spp/errors.hpp"

namespace spp {

SppWavevector spp_wavevector_lossless(const PermittivityModel& metal, double omega) {
  const double em = eval_lossless(metal, omega);
  if (em >= 0.0) throw no_solution_error("spp_wavevector_lossless: eps_m >= 0, no bound mode");
  if (em >= -1.0) throw no_solution_error("spp_wavevector_lossless: eps_m in [-1, 0), no bound mode");
  const double wc = omega / speed_of_light;
  const double k = wc * std::sqrt(em / (1.0 + em));
  const double nu = std::sqrt(k * k - em * wc * wc);
  const double nu0 = std::sqrt(k * k - wc * wc);
  return SppWavevector{k, 0.0, nu, nu0};
}

SppWavevector spp_wavevector_lossy(const PermittivityModel& metal, double omega) {
  const std::complex<double> em = eval_lossy(metal, omega);
  if (!(em.real() < -1.0))
    throw no_solution_error("spp_wavevector_lossy: Re(eps_m) must be < -1");
  const double wc = omega / speed_of_light;
  std::complex<double> K = wc * std::sqrt(em / (1.0 + em));
  if (K.real() < 0.0) K = -K;
  if (K.imag() < 0.0) {
    // principal branch with a post-hoc flip enforces decay for a passive medium
    K = std::conj(K);
    if (K.imag() < 0.0)
      throw internal_error("spp_wavevector_lossy: branch selection produced Im K < 0");
  }
  const SppWavevector lossless = spp_wavevector_lossless(metal, omega);
  return SppWavevector{K.real(), K.imag(), lossless.nu, lossless.nu0};
}

MatchCondition matching_angle(const PermittivityModel& metal, double eps1, double omega) {
  const double em = eval_lossless(metal, omega);
  if (em >= -1.0) throw no_solution_error("matching_angle: no bound mode at this omega");
  const double s2 = em / (eps1 * (1.0 + em));
  if (s2 > 1.0)
    throw no_solution_error("matching_angle: unmatchable (prism index too low at this omega)");
  if (s2 < 0.0) throw internal_error("matching_angle: negative arcsine argument");
  const double theta = std::asin(std::sqrt(s2));
  const double kp = std::sqrt(eps1) * (omega / speed_of_light) * std::sin(theta);
  return MatchCondition{theta, omega, kp};
}

double group_velocity(const PermittivityModel& metal, double omega0) {
  const double h = 1e-6 * omega0;
  double k_plus, k_minus;
  try {
    k_plus = spp_wavevector_lossless(metal, omega0 + h).k;
    k_minus = spp_wavevector_lossless(metal, omega0 - h).k;
  } catch (const no_solution_error&) {
    throw domain_error("group_velocity: omega0 +- h exits the bound-mode range");
  }
  const double dk = (k_plus - k_minus) / (2.0 * h);
  return 1.0 / dk;
}

bool is_bound_mode(const PermittivityModel& metal, double omega) {
  return eval_lossless(metal, omega) < -1.0;
}

bool is_matchable(const PermittivityModel& metal, double eps1, double omega) {
  if (!is_bound_mode(metal, omega)) return false;
  const double em = eval_lossless(metal, omega);
  return em / (eps1 * (1.0 + em)) <= 1.0;
}

double max_matchable_omega(const PermittivityModel& metal, double eps1) {
  // matchability breaks before omega_sp: eps/(eps1(1+eps)) is increasing toward
  // the eps -> -1 pole, so bisect the boundary on (1e12, omega_sp).
  double lo = 1.0e12;
  const double wsp = surface_plasma_frequency(metal);
  if (!is_matchable(metal, eps1, lo))
    throw no_solution_error("max_matchable_omega: range is empty at the low end");
  double hi = wsp;
  if (is_matchable(metal, eps1, hi * (1.0 - 1e-12))) return hi * (1.0 - 1e-12);
  for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (is_matchable(metal, eps1, mid))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace spp
