#pragma once

#include <cstddef>

#include "spp/kernels.hpp"

namespace spp::kernels {

// Backend entry points. The scalar set is always compiled; the AVX2 set is
// compiled in kernels_avx2.cpp with -mavx2 -mfma and only ever called after a
// cpuid check.

void drude_lossless_scalar(const DrudeParams&, const double*, double*, std::size_t);
void drude_lossy_scalar(const DrudeParams&, const double*, double*, double*, std::size_t);
void spp_dispersion_scalar(const DrudeParams&, double eps1, double c_light, const double*,
                           double*, double*, double*, double*, std::size_t);
void gaussian_intensity_scalar(double sigma, double t0, const double*, double*, std::size_t);
void decay_law_scalar(double scale, double two_kappa, const double*, double*, std::size_t);

#if defined(__x86_64__) || defined(_M_X64)
#define SPP_HAVE_AVX2_BUILD 1
void drude_lossless_avx2(const DrudeParams&, const double*, double*, std::size_t);
void drude_lossy_avx2(const DrudeParams&, const double*, double*, double*, std::size_t);
void spp_dispersion_avx2(const DrudeParams&, double eps1, double c_light, const double*,
                         double*, double*, double*, double*, std::size_t);
void gaussian_intensity_avx2(double sigma, double t0, const double*, double*, std::size_t);
void decay_law_avx2(double scale, double two_kappa, const double*, double*, std::size_t);
#else
#define SPP_HAVE_AVX2_BUILD 0
#endif

}  // namespace spp::kernels
