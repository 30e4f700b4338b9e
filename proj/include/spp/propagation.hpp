#pragma once

#include <complex>
#include <vector>

namespace spp {

/// Gaussian n-photon wavepacket, |xi(w)|^2 normal with std sigma about omega0,
/// emitted at t0 = 0. Requires sigma < omega0 / 50 (narrow band).
struct WavepacketSpec {
  double omega0;  // [rad/s]
  double sigma;   // [rad/s]
  int n;          // excitation number >= 0
  double t0 = 0.0;

  WavepacketSpec(double omega0, double sigma, int n);
};

/// xi_tilde(t): Fourier transform of the Gaussian spectral profile with
/// intensity normalization  int |xi_tilde|^2 dt = 1. The intensity std is 1/(2 sigma).
std::complex<double> temporal_profile(const WavepacketSpec& wp, double t);

/// Intensity |xi_tilde(t)|^2 (closed form).
double temporal_intensity(const WavepacketSpec& wp, double t);

/// f_out(t) = e^{-2 kappa0 x} * n * |xi_tilde(t - x/v_g)|^2
double flux(const WavepacketSpec& wp, double kappa0, double vg, double x, double t);

struct PropagationResult {
  double x;
  double kappa0;
  std::vector<double> flux_times;   // detector window, 65 samples
  std::vector<double> flux_profile; // f_out(t) at those times
  double mean_count;            // mu n e^{-2 kappa0 x}  (total-window convention)
  double mean_count_windowed;   // integral over [x/vg - 1/sigma, x/vg + 1/sigma]
  double expected_count;        // |beta0|^2 * mean_count
  double expected_count_windowed;
  double retarded_time_offset;  // x / vg
  double window_fraction;       // windowed/total = erf(sqrt(2))
};

/// Detector with efficiency mu at distance x. Reports both the total-window
/// count mu n e^{-2 kappa0 x} and the +-1/sigma windowed count (a fraction
/// erf(sqrt(2)) of the total).
PropagationResult detector_counts(const WavepacketSpec& wp, std::complex<double> beta0,
                                  double mu, double kappa0, double vg, double x);

/// |e^{iKx}|^2 + 2 kappa0 int_0^x e^{-2 kappa0 (x-x')} dx', the integral done
/// numerically. Equals 1 for any (kappa0, x): the bath insertion restores the
/// bosonic commutator.
double commutator_check(double kappa0, double x);

}  // namespace spp
