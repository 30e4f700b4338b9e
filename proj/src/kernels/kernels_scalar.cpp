#include <cmath>
#include <limits>

#include "kernels_dispatch.hpp"
#include "kernels_detail.hpp"

namespace spp::kernels {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

void drude_lossless_scalar(const DrudeParams& p, const double* omega, double* eps,
                           std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    eps[i] = detail::drude_lossless_one(p.omega_p, p.bg_real_coeff, omega[i]);
}

void drude_lossy_scalar(const DrudeParams& p, const double* omega, double* re, double* im,
                        std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    detail::drude_lossy_one(p.omega_p, p.gamma, p.bg_real_coeff, p.bg_imag, omega[i], re[i],
                            im[i]);
}

void spp_dispersion_scalar(const DrudeParams& p, double eps1, double c_light,
                           const double* omega, double* k, double* nu, double* nu0,
                           double* sin2, std::size_t n) {
  const double inv_c = 1.0 / c_light;
  const double inv_e1 = 1.0 / eps1;
  for (std::size_t i = 0; i < n; ++i) {
    const double em = detail::drude_lossless_one(p.omega_p, p.bg_real_coeff, omega[i]);
    if (!(em < -1.0)) {
      k[i] = nu[i] = nu0[i] = sin2[i] = kNaN;
      continue;
    }
    const double wc = omega[i] * inv_c;
    const double f = em / (1.0 + em);
    const double kk = wc * std::sqrt(f);
    const double k2 = kk * kk;
    const double wc2 = wc * wc;
    k[i] = kk;
    nu[i] = std::sqrt(k2 - em * wc2);
    nu0[i] = std::sqrt(k2 - wc2);
    const double s2 = f * inv_e1;
    sin2[i] = s2 <= 1.0 ? s2 : kNaN;
  }
}

void gaussian_intensity_scalar(double sigma, double t0, const double* t, double* out,
                               std::size_t n) {
  const double pre = std::sqrt(2.0 / 3.14159265358979323846) * sigma;
  for (std::size_t i = 0; i < n; ++i)
    out[i] = detail::gaussian_intensity_one(sigma, t0, pre, t[i]);
}

void decay_law_scalar(double scale, double two_kappa, const double* x, double* out,
                      std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = scale * detail::exp_core(-two_kappa * x[i]);
}

}  // namespace spp::kernels
