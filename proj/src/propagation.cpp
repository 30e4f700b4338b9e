#include "spp/propagation.hpp"

#include <cmath>

#include "spp/constants.hpp"
#include "spp/detail/quadrature.hpp"
#include "spp/errors.hpp"
#include "spp/kernels.hpp"

namespace spp {

WavepacketSpec::WavepacketSpec(double omega0_, double sigma_, int n_)
    : omega0(omega0_), sigma(sigma_), n(n_) {
  if (!(omega0 > 0.0)) throw domain_error("WavepacketSpec: omega0 must be > 0");
  if (!(sigma > 0.0)) throw domain_error("WavepacketSpec: sigma must be > 0");
  if (!(sigma < omega0 / 50.0)) throw domain_error("WavepacketSpec: requires sigma < omega0/50");
  if (n < 0) throw domain_error("WavepacketSpec: n must be >= 0");
}

std::complex<double> temporal_profile(const WavepacketSpec& wp, double t) {
  // Gaussian transform, intensity-normalized; carrier e^{-i w0 (t - t0)}.
  const double dt = t - wp.t0;
  const double env = std::pow(2.0 * wp.sigma * wp.sigma / pi, 0.25) *
                     std::exp(-wp.sigma * wp.sigma * dt * dt);
  return std::polar(env, -wp.omega0 * dt);
}

double temporal_intensity(const WavepacketSpec& wp, double t) {
  const double dt = t - wp.t0;
  return std::sqrt(2.0 / pi) * wp.sigma * std::exp(-2.0 * wp.sigma * wp.sigma * dt * dt);
}

double flux(const WavepacketSpec& wp, double kappa0, double vg, double x, double t) {
  if (x < 0.0) throw domain_error("flux: x must be >= 0");
  const double t_r = t - x / vg;
  return std::exp(-2.0 * kappa0 * x) * wp.n * temporal_intensity(wp, t_r);
}

PropagationResult detector_counts(const WavepacketSpec& wp, std::complex<double> beta0,
                                  double mu, double kappa0, double vg, double x) {
  if (mu < 0.0 || mu > 1.0) throw domain_error("detector_counts: mu must lie in [0, 1]");
  if (std::abs(beta0) > 1.0 + 1e-12) throw domain_error("detector_counts: |beta0| must be <= 1");
  if (x < 0.0) throw domain_error("detector_counts: x must be >= 0");

  const double decay = std::exp(-2.0 * kappa0 * x);
  const double total = mu * wp.n * decay;
  // detector window t in [x/vg - 1/sigma, x/vg + 1/sigma]; the intensity is
  // Gaussian with std 1/(2 sigma), so the captured fraction is erf(sqrt(2)).
  const double fraction = std::erf(std::sqrt(2.0));
  const double b2 = std::norm(beta0);

  PropagationResult res;
  res.x = x;
  res.kappa0 = kappa0;
  constexpr int kSamples = 65;
  const double t_r = x / vg;
  res.flux_times.resize(kSamples);
  res.flux_profile.resize(kSamples);
  for (int i = 0; i < kSamples; ++i)
    res.flux_times[i] = t_r - 1.0 / wp.sigma + (2.0 / wp.sigma) * i / (kSamples - 1);
  kernels::gaussian_intensity(wp.sigma, t_r + wp.t0, res.flux_times.data(),
                              res.flux_profile.data(), kSamples);
  for (double& f : res.flux_profile) f *= decay * wp.n;
  res.mean_count = total;
  res.mean_count_windowed = total * fraction;
  res.expected_count = b2 * total;
  res.expected_count_windowed = b2 * total * fraction;
  res.retarded_time_offset = x / vg;
  res.window_fraction = fraction;
  return res;
}

double commutator_check(double kappa0, double x) {
  if (x < 0.0) throw domain_error("commutator_check: x must be >= 0");
  if (kappa0 < 0.0) throw domain_error("commutator_check: kappa0 must be >= 0");
  const double through = std::exp(-2.0 * kappa0 * x);
  if (kappa0 == 0.0 || x == 0.0) return through;
  auto integrand = [&](double xp) { return 2.0 * kappa0 * std::exp(-2.0 * kappa0 * (x - xp)); };
  const double bath = detail::adaptive_simpson(integrand, 0.0, x, 1e-13, 60);
  return through + bath;
}

}  // namespace spp
