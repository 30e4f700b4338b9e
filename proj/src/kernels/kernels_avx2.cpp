// AVX2 + FMA variants of the batch kernels. Compiled with -mavx2 -mfma and
// reached only after a runtime cpuid check. Tail elements fall back to the
// scalar loops.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>
#include <cstdint>
#include <limits>

#include "kernels_detail.hpp"
#include "kernels_dispatch.hpp"

namespace spp::kernels {

namespace {

// e^x per lane, same operation sequence as detail::exp_core.
__m256d exp4(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
  const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);

  const __m256d hi_cut = _mm256_set1_pd(709.782712893384);
  const __m256d lo_cut = _mm256_set1_pd(-745.133219101941);

  const __m256d nd = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                     _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(nd, ln2_hi, x);
  r = _mm256_fnmadd_pd(nd, ln2_lo, r);

  __m256d p = _mm256_set1_pd(1.0 / 87178291200.0);  // 1/14!
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 6227020800.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 479001600.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 39916800.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 3628800.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 362880.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 40320.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 5040.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 720.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 120.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 24.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 6.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

  // 2^n via two exponent-field constructions (handles extreme n)
  const __m128i n = _mm256_cvtpd_epi32(nd);
  const __m128i n1 = _mm_srai_epi32(n, 1);
  const __m128i n2 = _mm_sub_epi32(n, n1);
  const __m128i bias = _mm_set1_epi32(1023);
  auto pow2 = [&](__m128i e) {
    const __m256i e64 = _mm256_cvtepi32_epi64(_mm_add_epi32(e, bias));
    return _mm256_castsi256_pd(_mm256_slli_epi64(e64, 52));
  };
  p = _mm256_mul_pd(_mm256_mul_pd(p, pow2(n1)), pow2(n2));

  // range and NaN handling
  const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  p = _mm256_blendv_pd(p, inf, _mm256_cmp_pd(x, hi_cut, _CMP_GT_OQ));
  p = _mm256_blendv_pd(p, _mm256_setzero_pd(), _mm256_cmp_pd(x, lo_cut, _CMP_LT_OQ));
  p = _mm256_blendv_pd(p, x, _mm256_cmp_pd(x, x, _CMP_UNORD_Q));
  return p;
}

}  // namespace

void drude_lossless_avx2(const DrudeParams& dp, const double* omega, double* eps,
                         std::size_t n) {
  const __m256d inv_wp = _mm256_set1_pd(1.0 / dp.omega_p);
  const __m256d bg = _mm256_set1_pd(dp.bg_real_coeff);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d w = _mm256_loadu_pd(omega + i);
    const __m256d u = _mm256_mul_pd(w, inv_wp);
    const __m256d u2 = _mm256_mul_pd(u, u);
    const __m256d e = _mm256_add_pd(_mm256_sub_pd(one, _mm256_div_pd(one, u2)),
                                    _mm256_mul_pd(bg, u2));
    _mm256_storeu_pd(eps + i, e);
  }
  if (i < n) drude_lossless_scalar(dp, omega + i, eps + i, n - i);
}

void drude_lossy_avx2(const DrudeParams& dp, const double* omega, double* re, double* im,
                      std::size_t n) {
  const __m256d inv_wp = _mm256_set1_pd(1.0 / dp.omega_p);
  const __m256d wp2 = _mm256_set1_pd(dp.omega_p * dp.omega_p);
  const __m256d gam = _mm256_set1_pd(dp.gamma);
  const __m256d bg = _mm256_set1_pd(dp.bg_real_coeff);
  const __m256d bgi = _mm256_set1_pd(dp.bg_imag);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d w = _mm256_loadu_pd(omega + i);
    const __m256d u = _mm256_mul_pd(w, inv_wp);
    const __m256d u2 = _mm256_mul_pd(u, u);
    const __m256d w2 = _mm256_mul_pd(w, w);
    const __m256d wg = _mm256_mul_pd(w, gam);
    const __m256d den = _mm256_add_pd(_mm256_mul_pd(w2, w2), _mm256_mul_pd(wg, wg));
    const __m256d er = _mm256_add_pd(
        _mm256_sub_pd(one, _mm256_div_pd(_mm256_mul_pd(wp2, w2), den)),
        _mm256_mul_pd(bg, u2));
    const __m256d ei = _mm256_add_pd(_mm256_div_pd(_mm256_mul_pd(wp2, wg), den), bgi);
    _mm256_storeu_pd(re + i, er);
    _mm256_storeu_pd(im + i, ei);
  }
  if (i < n) drude_lossy_scalar(dp, omega + i, re + i, im + i, n - i);
}

void spp_dispersion_avx2(const DrudeParams& dp, double eps1, double c_light,
                         const double* omega, double* k, double* nu, double* nu0, double* sin2,
                         std::size_t n) {
  const __m256d inv_wp = _mm256_set1_pd(1.0 / dp.omega_p);
  const __m256d bg = _mm256_set1_pd(dp.bg_real_coeff);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d minus_one = _mm256_set1_pd(-1.0);
  const __m256d inv_c = _mm256_set1_pd(1.0 / c_light);
  const __m256d inv_e1 = _mm256_set1_pd(1.0 / eps1);
  const __m256d nan = _mm256_set1_pd(std::numeric_limits<double>::quiet_NaN());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d w = _mm256_loadu_pd(omega + i);
    const __m256d u = _mm256_mul_pd(w, inv_wp);
    const __m256d u2 = _mm256_mul_pd(u, u);
    const __m256d em = _mm256_add_pd(_mm256_sub_pd(one, _mm256_div_pd(one, u2)),
                                     _mm256_mul_pd(bg, u2));
    const __m256d bound = _mm256_cmp_pd(em, minus_one, _CMP_LT_OQ);
    const __m256d wc = _mm256_mul_pd(w, inv_c);
    const __m256d f = _mm256_div_pd(em, _mm256_add_pd(one, em));
    const __m256d kk = _mm256_mul_pd(wc, _mm256_sqrt_pd(f));
    const __m256d k2 = _mm256_mul_pd(kk, kk);
    const __m256d wc2 = _mm256_mul_pd(wc, wc);
    const __m256d nn = _mm256_sqrt_pd(_mm256_sub_pd(k2, _mm256_mul_pd(em, wc2)));
    const __m256d nn0 = _mm256_sqrt_pd(_mm256_sub_pd(k2, wc2));
    const __m256d s2 = _mm256_mul_pd(f, inv_e1);
    const __m256d matchable = _mm256_cmp_pd(s2, one, _CMP_LE_OQ);
    _mm256_storeu_pd(k + i, _mm256_blendv_pd(nan, kk, bound));
    _mm256_storeu_pd(nu + i, _mm256_blendv_pd(nan, nn, bound));
    _mm256_storeu_pd(nu0 + i, _mm256_blendv_pd(nan, nn0, bound));
    _mm256_storeu_pd(sin2 + i,
                     _mm256_blendv_pd(nan, s2, _mm256_and_pd(bound, matchable)));
  }
  if (i < n) spp_dispersion_scalar(dp, eps1, c_light, omega + i, k + i, nu + i, nu0 + i,
                                   sin2 + i, n - i);
}

void gaussian_intensity_avx2(double sigma, double t0, const double* t, double* out,
                             std::size_t n) {
  const double pre_s = std::sqrt(2.0 / 3.14159265358979323846) * sigma;
  const __m256d pre = _mm256_set1_pd(pre_s);
  const __m256d vt0 = _mm256_set1_pd(t0);
  const __m256d m2s2 = _mm256_set1_pd(-2.0 * sigma * sigma);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dt = _mm256_sub_pd(_mm256_loadu_pd(t + i), vt0);
    const __m256d arg = _mm256_mul_pd(m2s2, _mm256_mul_pd(dt, dt));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(pre, exp4(arg)));
  }
  if (i < n) gaussian_intensity_scalar(sigma, t0, t + i, out + i, n - i);
}

void decay_law_avx2(double scale, double two_kappa, const double* x, double* out,
                    std::size_t n) {
  const __m256d vs = _mm256_set1_pd(scale);
  const __m256d mk = _mm256_set1_pd(-two_kappa);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d arg = _mm256_mul_pd(mk, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(vs, exp4(arg)));
  }
  if (i < n) decay_law_scalar(scale, two_kappa, x + i, out + i, n - i);
}

}  // namespace spp::kernels

#endif  // x86_64
