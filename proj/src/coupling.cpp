#include "spp/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "spp/constants.hpp"
#include "spp/errors.hpp"

namespace spp {

namespace {

double wrap_phase(double phi) {
  while (phi < 0.0) phi += 2.0 * pi;
  while (phi >= 2.0 * pi) phi -= 2.0 * pi;
  return phi;
}

// Smallest d with P <= 1 for this stack's geometry.
double penetration_cap(const LayerStack& stack, double omega) {
  const SppWavevector wv = spp_wavevector_lossless(stack.metal, omega);
  const double rate = stack.geometry == Geometry::Otto ? wv.nu0 : wv.nu;
  return 2.0 / rate * (1.0 + 1e-12);
}

LayerStack with_thickness(const LayerStack& s, double d) {
  return LayerStack(s.geometry, s.eps1, d, s.metal);
}

}  // namespace

TransferCoefficients TransferCoefficients::from_beta(cdouble beta, double penetration) {
  const double ab = std::min(std::abs(beta), 1.0);
  const double theta = std::asin(ab);
  const double phi = ab > 0.0 ? wrap_phase(std::arg(beta)) : 0.0;
  TransferCoefficients tc;
  tc.theta_mix = theta;
  tc.phi_mix = phi;
  tc.alpha = {std::cos(theta), 0.0};
  tc.beta = std::polar(std::sin(theta), phi);
  tc.g = std::polar(theta, phi);
  tc.g_tilde = 2.0 / pi * theta;
  tc.penetration = penetration;
  return tc;
}

double penetration_factor(const LayerStack& stack, double omega) {
  const SppWavevector wv = spp_wavevector_lossless(stack.metal, omega);
  return stack.geometry == Geometry::Otto ? 2.0 / (wv.nu0 * stack.d) : 2.0 / (wv.nu * stack.d);
}

TransferCoefficients transfer_coefficients(const LayerStack& stack, double omega) {
  const MatchCondition mc = matching_angle(stack.metal, stack.eps1, omega);
  const ThreeLayerResult tl = three_layer_profile(stack, omega, mc.theta, MetalResponse::Lossy);
  const ModeProfile phi = spp_profile(stack.metal, omega, stack);
  const cdouble ovl = overlap(phi, tl.psi);
  const cdouble beta = -std::conj(tl.fresnel.tau * ovl);
  if (std::abs(beta) > 1.0 + 1e-9)
    throw internal_error("transfer_coefficients: |beta| > 1");
  return TransferCoefficients::from_beta(beta, penetration_factor(stack, omega));
}

std::pair<double, TransferCoefficients> optimize_thickness(const LayerStack& stack_template,
                                                           double omega,
                                                           ThicknessRange d_range) {
  if (!(d_range.lo > 0.0) || !(d_range.hi > d_range.lo))
    throw domain_error("optimize_thickness: invalid d_range");
  const double lo = std::max(d_range.lo, penetration_cap(stack_template, omega));
  const double hi = d_range.hi;
  if (!(lo < hi))
    throw infeasible_error("optimize_thickness: no d in range satisfies P <= 1");

  auto value = [&](double d) {
    return transfer_coefficients(with_thickness(stack_template, d), omega).g_tilde;
  };

  // coarse log-spaced bracket
  constexpr int kCoarse = 32;
  const double llo = std::log(lo), lhi = std::log(hi);
  int best = 0;
  double best_val = -1.0;
  std::vector<double> ds(kCoarse);
  for (int i = 0; i < kCoarse; ++i) {
    ds[i] = std::exp(llo + (lhi - llo) * i / (kCoarse - 1));
    const double v = value(ds[i]);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = ds[std::max(best - 1, 0)];
  double b = ds[std::min(best + 1, kCoarse - 1)];

  // golden section; ties shrink toward smaller d
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
  double f1 = value(c1), f2 = value(c2);
  for (int it = 0; it < 100 && (b - a) > 1e-10 * b; ++it) {
    if (f1 >= f2) {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - gr * (b - a);
      f1 = value(c1);
    } else {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + gr * (b - a);
      f2 = value(c2);
    }
  }
  const double d_opt = 0.5 * (a + b);
  return {d_opt, transfer_coefficients(with_thickness(stack_template, d_opt), omega)};
}

DeformationReport deformation_metrics(const LayerStack& stack_template, double omega0,
                                      double delta_lambda, ThicknessRange d_range) {
  if (!(delta_lambda >= 0.0)) throw domain_error("deformation_metrics: delta_lambda < 0");
  const auto [d_opt, tc0] = optimize_thickness(stack_template, omega0, d_range);
  (void)tc0;
  const LayerStack stack = with_thickness(stack_template, d_opt);

  // FWHM in omega from the wavelength bandwidth; band edges at +-2 sigma.
  const double fwhm = omega0 * omega0 * delta_lambda / (2.0 * pi * speed_of_light);
  const double sigma = fwhm / (2.0 * std::sqrt(2.0 * std::log(2.0)));
  const double half = 2.0 * sigma;

  double lo = omega0 - half;
  double hi = omega0 + half;
  bool partial = false;
  const double w_max = max_matchable_omega(stack.metal, stack.eps1);
  if (hi > w_max) {
    hi = w_max;
    partial = true;
  }
  if (!is_matchable(stack.metal, stack.eps1, lo)) {
    // bisect the lower matchability edge (possible only for exotic materials)
    double bad = lo, good = omega0;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (bad + good);
      (is_matchable(stack.metal, stack.eps1, mid) ? good : bad) = mid;
    }
    lo = good;
    partial = true;
  }

  DeformationReport rep;
  rep.omega0 = omega0;
  rep.bandwidth_lambda = delta_lambda;
  rep.omega_lo = lo;
  rep.omega_hi = hi;
  rep.d_used = d_opt;
  rep.partial_band = partial;

  const double th_lo = matching_angle(stack.metal, stack.eps1, lo).theta;
  const double th_hi = matching_angle(stack.metal, stack.eps1, hi).theta;
  rep.delta_theta_deg = std::abs(th_hi - th_lo) * 180.0 / pi;

  constexpr int kSamples = 101;
  cdouble g_lo{0, 0}, g_hi{0, 0};
  double mag_min = 0.0, mag_max = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double w = lo + (hi - lo) * i / (kSamples - 1);
    const cdouble g = transfer_coefficients(stack, w).g;
    const double mag = std::abs(g);
    if (i == 0) {
      g_lo = g;
      mag_min = mag_max = mag;
    } else {
      mag_min = std::min(mag_min, mag);
      mag_max = std::max(mag_max, mag);
    }
    if (i == kSamples - 1) g_hi = g;
  }
  rep.delta_g_mag = std::abs(g_hi - g_lo);
  rep.delta_g_modulus_spread = mag_max - mag_min;
  return rep;
}

}  // namespace spp
