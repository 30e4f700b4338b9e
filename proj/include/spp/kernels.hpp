#pragma once

#include <cstddef>
#include <string>

#include "spp/materials.hpp"

namespace spp::kernels {

// Batch kernels for the data-parallel inner loops of the sweep engines.
// Scalar reference implementations always exist; an AVX2 variant is selected
// at runtime when the CPU supports it. Both paths are equivalence-tested.
//
// Complex outputs use separate re/im arrays (SoA) so lanes stay contiguous.

struct DrudeParams {
  double omega_p;
  double gamma;
  double bg_real_coeff;
  double bg_imag;
};

DrudeParams params_of(const PermittivityModel& m);

// eps(w) lossless, n values.
void drude_lossless(const DrudeParams& p, const double* omega, double* eps, std::size_t n);

// eps(w) lossy, n values.
void drude_lossy(const DrudeParams& p, const double* omega, double* eps_re, double* eps_im,
                 std::size_t n);

// Lossless bound-mode batch: k, nu, nu0 and the matching-angle sine squared
// sin2 = eps/(eps1 (1+eps)). Entries with eps >= -1 get NaN in all outputs;
// entries with sin2 > 1 keep k/nu/nu0 and get NaN in sin2 only.
void spp_dispersion(const DrudeParams& p, double eps1, const double* omega, double* k,
                    double* nu, double* nu0, double* sin2, std::size_t n);

// out[i] = sqrt(2/pi) * sigma * exp(-2 sigma^2 (t[i] - t0)^2)
void gaussian_intensity(double sigma, double t0, const double* t, double* out, std::size_t n);

// out[i] = scale * exp(-two_kappa * x[i])
void decay_law(double scale, double two_kappa, const double* x, double* out, std::size_t n);

// Vectorizable exp used by the AVX2 kernels; exposed for equivalence tests.
double exp_reference(double x);

enum class Backend { Scalar, Avx2 };

Backend active_backend();

// Force a backend ("scalar"/"avx2"); throws domain_error on unknown names or
// when avx2 is requested on a machine without it. The SPPSIM_KERNELS
// environment variable applies the same override at startup.
void set_backend(const std::string& name);

const char* to_string(Backend b);

}  // namespace spp::kernels
