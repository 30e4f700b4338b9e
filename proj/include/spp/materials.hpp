#pragma once

#include <complex>
#include <istream>
#include <map>
#include <string>

namespace spp {

/// Drude metal with a real background correction delta_eps_r = bg_real_coeff * (w/w_p)^2
/// and a constant imaginary correction bg_imag:
///
///   eps_m(w) = 1 - w_p^2 / (w^2 + i w Gamma) + bg_real_coeff * w^2/w_p^2 + i * bg_imag
///
/// The lossless variant drops Gamma and bg_imag.
struct PermittivityModel {
  double omega_p;        // plasma frequency [rad/s]
  double gamma;          // damping rate [rad/s]
  double bg_real_coeff;  // dimensionless, multiplies w^2/w_p^2
  double bg_imag;        // dimensionless constant Im correction

  PermittivityModel(double omega_p, double gamma, double bg_real_coeff, double bg_imag);
};

std::complex<double> eval_lossy(const PermittivityModel& m, double omega);
double eval_lossless(const PermittivityModel& m, double omega);

/// Smallest w > 0 with eval_lossless(w) = -1, found by bisection refined with
/// secant steps on the bracket (1e12, omega_p). Relative tolerance 1e-12.
double surface_plasma_frequency(const PermittivityModel& m);

enum class Geometry { Otto, KretschmannRaether };

const char* to_string(Geometry g);
Geometry geometry_from_string(const std::string& s);

/// Prism (eps1, layer I) + gap-or-film (thickness d, layer II) + layer III.
/// Otto: layer II is air, layer III is metal. KR: layer II is metal, layer III is air.
/// Layer IV is air in both and far enough away to be ignored.
struct LayerStack {
  Geometry geometry;
  double eps1;  // prism permittivity, real, > 1
  double d;     // layer-II thickness [m]
  PermittivityModel metal;

  LayerStack(Geometry geometry, double eps1, double d, PermittivityModel metal);

  std::complex<double> eps2_lossy(double omega) const;
  std::complex<double> eps3_lossy(double omega) const;
  double eps2_lossless(double omega) const;
  double eps3_lossless(double omega) const;
};

/// Named materials, seeded with the silver parameters used throughout.
class MaterialRegistry {
 public:
  MaterialRegistry();  // ships "silver"

  const PermittivityModel& get(const std::string& name) const;
  bool has(const std::string& name) const;
  void add(const std::string& name, const PermittivityModel& m);

  /// Merge `[material "<name>"]` sections from a config stream.
  /// Throws config_error with a line number on parse problems.
  void load(std::istream& in);

 private:
  std::map<std::string, PermittivityModel> materials_;
};

PermittivityModel silver_model();

}  // namespace spp
