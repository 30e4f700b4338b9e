#include "spp/materials.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spp/config.hpp"
#include "spp/errors.hpp"

namespace spp {

PermittivityModel::PermittivityModel(double omega_p_, double gamma_, double bg_real_coeff_,
                                     double bg_imag_)
    : omega_p(omega_p_), gamma(gamma_), bg_real_coeff(bg_real_coeff_), bg_imag(bg_imag_) {
  if (!(omega_p > 0.0)) throw domain_error("PermittivityModel: omega_p must be > 0");
  if (!(gamma >= 0.0)) throw domain_error("PermittivityModel: gamma must be >= 0");
  if (!(bg_imag >= 0.0)) throw domain_error("PermittivityModel: bg_imag must be >= 0");
}

std::complex<double> eval_lossy(const PermittivityModel& m, double omega) {
  if (!(omega > 0.0)) throw domain_error("eval_lossy: omega must be > 0");
  const double u2 = (omega / m.omega_p) * (omega / m.omega_p);
  const std::complex<double> drude =
      m.omega_p * m.omega_p / std::complex<double>(omega * omega, omega * m.gamma);
  return 1.0 - drude + std::complex<double>(m.bg_real_coeff * u2, m.bg_imag);
}

double eval_lossless(const PermittivityModel& m, double omega) {
  if (!(omega > 0.0)) throw domain_error("eval_lossless: omega must be > 0");
  const double u2 = (omega / m.omega_p) * (omega / m.omega_p);
  return 1.0 - 1.0 / u2 + m.bg_real_coeff * u2;
}

double surface_plasma_frequency(const PermittivityModel& m) {
  // eval_lossless is strictly increasing on (0, omega_p) for bg_real_coeff >= 0,
  // so a sign change of f(w) = eps(w) + 1 brackets the unique root.
  auto f = [&](double w) { return eval_lossless(m, w) + 1.0; };
  double lo = std::min(1.0e12, m.omega_p * 1e-9);
  double hi = m.omega_p;
  if (f(lo) >= 0.0 || f(hi) <= 0.0)
    throw no_solution_error("surface_plasma_frequency: no root of eps = -1 below omega_p");
  double flo = f(lo), fhi = f(hi);
  for (int it = 0; it < 200 && (hi - lo) > 1e-12 * hi; ++it) {
    // secant proposal, bisection fallback
    double mid = lo - flo * (hi - lo) / (fhi - flo);
    if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
    const double bis = 0.5 * (lo + hi);
    // keep the bracket shrinking geometrically
    if (std::abs(mid - bis) > 0.45 * (hi - lo)) mid = bis;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (fm < 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return 0.5 * (lo + hi);
}

const char* to_string(Geometry g) {
  return g == Geometry::Otto ? "otto" : "kr";
}

Geometry geometry_from_string(const std::string& s) {
  if (s == "otto" || s == "Otto" || s == "O") return Geometry::Otto;
  if (s == "kr" || s == "KR" || s == "kretschmann-raether") return Geometry::KretschmannRaether;
  throw domain_error("unknown geometry '" + s + "' (expected otto|kr)");
}

LayerStack::LayerStack(Geometry geometry_, double eps1_, double d_, PermittivityModel metal_)
    : geometry(geometry_), eps1(eps1_), d(d_), metal(metal_) {
  if (!(eps1 > 1.0)) throw domain_error("LayerStack: eps1 must be > 1");
  if (!(d > 0.0)) throw domain_error("LayerStack: d must be > 0");
}

std::complex<double> LayerStack::eps2_lossy(double omega) const {
  return geometry == Geometry::Otto ? std::complex<double>(1.0, 0.0) : eval_lossy(metal, omega);
}

std::complex<double> LayerStack::eps3_lossy(double omega) const {
  return geometry == Geometry::Otto ? eval_lossy(metal, omega) : std::complex<double>(1.0, 0.0);
}

double LayerStack::eps2_lossless(double omega) const {
  return geometry == Geometry::Otto ? 1.0 : eval_lossless(metal, omega);
}

double LayerStack::eps3_lossless(double omega) const {
  return geometry == Geometry::Otto ? eval_lossless(metal, omega) : 1.0;
}

PermittivityModel silver_model() {
  return PermittivityModel(1.402e16, 6.25e13, 29.0, 0.22);
}

MaterialRegistry::MaterialRegistry() {
  materials_.emplace("silver", silver_model());
}

const PermittivityModel& MaterialRegistry::get(const std::string& name) const {
  auto it = materials_.find(name);
  if (it == materials_.end()) throw domain_error("unknown material '" + name + "'");
  return it->second;
}

bool MaterialRegistry::has(const std::string& name) const {
  return materials_.count(name) != 0;
}

void MaterialRegistry::add(const std::string& name, const PermittivityModel& m) {
  materials_.insert_or_assign(name, m);
}

void MaterialRegistry::load(std::istream& in) {
  const ConfigFile cf = ConfigFile::parse(in);
  for (const auto& sec : cf.sections) {
    if (sec.kind != "material") continue;
    if (sec.name.empty()) throw config_error("material section needs a name", sec.line);
    for (const char* key : {"omega_p", "gamma", "bg_real_coeff", "bg_imag"})
      if (!sec.has(key))
        throw config_error("material \"" + sec.name + "\" missing key '" + key + "'", sec.line);
    try {
      add(sec.name, PermittivityModel(sec.get_double("omega_p"), sec.get_double("gamma"),
                                      sec.get_double("bg_real_coeff"), sec.get_double("bg_imag")));
    } catch (const domain_error& e) {
      throw config_error(std::string("material \"") + sec.name + "\": " + e.what(), sec.line);
    }
  }
}

}  // namespace spp
