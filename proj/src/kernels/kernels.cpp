#include "spp/kernels.hpp"

#include <cstdlib>

#include "kernels_detail.hpp"
#include "kernels_dispatch.hpp"
#include "spp/constants.hpp"
#include "spp/errors.hpp"

namespace spp::kernels {

namespace {

bool cpu_has_avx2() {
#if SPP_HAVE_AVX2_BUILD
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend resolve_initial() {
  if (const char* env = std::getenv("SPPSIM_KERNELS")) {
    const std::string s(env);
    if (s == "scalar") return Backend::Scalar;
    if (s == "avx2" && cpu_has_avx2()) return Backend::Avx2;
    if (s == "avx2") return Backend::Scalar;  // requested but unavailable
  }
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

Backend& backend_state() {
  static Backend b = resolve_initial();
  return b;
}

}  // namespace

DrudeParams params_of(const PermittivityModel& m) {
  return DrudeParams{m.omega_p, m.gamma, m.bg_real_coeff, m.bg_imag};
}

Backend active_backend() {
  return backend_state();
}

void set_backend(const std::string& name) {
  if (name == "scalar") {
    backend_state() = Backend::Scalar;
    return;
  }
  if (name == "avx2") {
    if (!cpu_has_avx2()) throw domain_error("set_backend: avx2 not supported on this CPU");
    backend_state() = Backend::Avx2;
    return;
  }
  throw domain_error("set_backend: unknown backend '" + name + "'");
}

const char* to_string(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

void drude_lossless(const DrudeParams& p, const double* omega, double* eps, std::size_t n) {
#if SPP_HAVE_AVX2_BUILD
  if (backend_state() == Backend::Avx2) return drude_lossless_avx2(p, omega, eps, n);
#endif
  drude_lossless_scalar(p, omega, eps, n);
}

void drude_lossy(const DrudeParams& p, const double* omega, double* re, double* im,
                 std::size_t n) {
#if SPP_HAVE_AVX2_BUILD
  if (backend_state() == Backend::Avx2) return drude_lossy_avx2(p, omega, re, im, n);
#endif
  drude_lossy_scalar(p, omega, re, im, n);
}

void spp_dispersion(const DrudeParams& p, double eps1, const double* omega, double* k,
                    double* nu, double* nu0, double* sin2, std::size_t n) {
#if SPP_HAVE_AVX2_BUILD
  if (backend_state() == Backend::Avx2)
    return spp_dispersion_avx2(p, eps1, speed_of_light, omega, k, nu, nu0, sin2, n);
#endif
  spp_dispersion_scalar(p, eps1, speed_of_light, omega, k, nu, nu0, sin2, n);
}

void gaussian_intensity(double sigma, double t0, const double* t, double* out, std::size_t n) {
#if SPP_HAVE_AVX2_BUILD
  if (backend_state() == Backend::Avx2) return gaussian_intensity_avx2(sigma, t0, t, out, n);
#endif
  gaussian_intensity_scalar(sigma, t0, t, out, n);
}

void decay_law(double scale, double two_kappa, const double* x, double* out, std::size_t n) {
#if SPP_HAVE_AVX2_BUILD
  if (backend_state() == Backend::Avx2) return decay_law_avx2(scale, two_kappa, x, out, n);
#endif
  decay_law_scalar(scale, two_kappa, x, out, n);
}

double exp_reference(double x) {
  return detail::exp_core(x);
}

}  // namespace spp::kernels
