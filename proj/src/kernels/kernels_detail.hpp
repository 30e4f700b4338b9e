#pragma once

#include <cmath>

// Shared scalar arithmetic for the batch kernels. The scalar loops and the
// per-lane AVX2 math follow these expressions exactly so the two backends can
// be equivalence-tested tightly.

namespace spp::kernels::detail {

inline double drude_lossless_one(double omega_p, double bg, double w) {
  const double u = w * (1.0 / omega_p);
  const double u2 = u * u;
  return (1.0 - 1.0 / u2) + bg * u2;
}

inline void drude_lossy_one(double omega_p, double gamma, double bg, double bg_i, double w,
                            double& re, double& im) {
  const double u = w * (1.0 / omega_p);
  const double u2 = u * u;
  const double w2 = w * w;
  const double wg = w * gamma;
  const double wp2 = omega_p * omega_p;
  const double den = w2 * w2 + wg * wg;
  re = (1.0 - (wp2 * w2) / den) + bg * u2;
  im = (wp2 * wg) / den + bg_i;
}

// exp as 2^n * e^r with r = x - n ln2, |r| <= ln2/2, e^r by a degree-9
// polynomial evaluated with fused multiply-adds. The AVX2 lanes run the same
// operation sequence, so both backends agree to the last bit on normal output.
inline double exp_core(double x) {
  if (x != x) return x;
  if (x > 709.782712893384) return HUGE_VAL;
  if (x < -745.133219101941) return 0.0;
  const double log2e = 1.4426950408889634074;
  const double ln2_hi = 6.93145751953125e-1;
  const double ln2_lo = 1.42860682030941723212e-6;
  const double nd = std::nearbyint(x * log2e);
  double r = std::fma(-nd, ln2_hi, x);
  r = std::fma(-nd, ln2_lo, r);
  double p = 1.0 / 87178291200.0;  // 1/14!
  p = std::fma(p, r, 1.0 / 6227020800.0);
  p = std::fma(p, r, 1.0 / 479001600.0);
  p = std::fma(p, r, 1.0 / 39916800.0);
  p = std::fma(p, r, 1.0 / 3628800.0);
  p = std::fma(p, r, 1.0 / 362880.0);
  p = std::fma(p, r, 1.0 / 40320.0);
  p = std::fma(p, r, 1.0 / 5040.0);
  p = std::fma(p, r, 1.0 / 720.0);
  p = std::fma(p, r, 1.0 / 120.0);
  p = std::fma(p, r, 1.0 / 24.0);
  p = std::fma(p, r, 1.0 / 6.0);
  p = std::fma(p, r, 0.5);
  p = std::fma(p, r, 1.0);
  p = std::fma(p, r, 1.0);
  return std::ldexp(p, static_cast<int>(nd));
}

inline double gaussian_intensity_one(double sigma, double t0, double pre, double t) {
  const double dt = t - t0;
  return pre * exp_core((-2.0 * sigma * sigma) * (dt * dt));
}

}  // namespace spp::kernels::detail
