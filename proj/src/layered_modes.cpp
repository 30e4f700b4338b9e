#include "spp/layered_modes.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "spp/constants.hpp"
#include "spp/detail/quadrature.hpp"
#include "spp/dispersion.hpp"
#include "spp/errors.hpp"

namespace spp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sqrt with Re >= 0 (ties: Im >= 0), the decaying-branch convention for gamma_i.
cdouble sqrt_decaying(cdouble z) {
  cdouble r = std::sqrt(z);
  if (r.real() < 0.0) r = -r;
  if (r.real() == 0.0 && r.imag() < 0.0) r = -r;
  return r;
}

// int_{z0}^{z1} conj(p(z)) . q(z) dz with exponents evaluated at the endpoints,
// so large decay rates never overflow.
cdouble pair_integral(const ProfilePiece& p, const ProfilePiece& q) {
  const double z0 = std::max(p.z0, q.z0);
  const double z1 = std::min(p.z1, q.z1);
  if (!(z1 > z0)) return {0.0, 0.0};
  const cdouble amp = std::conj(p.amp_x) * q.amp_x + std::conj(p.amp_z) * q.amp_z;
  const cdouble c = std::conj(p.rate) + q.rate;
  auto f = [&](double z) { return std::conj(p.rate) * (z - p.z_ref) + q.rate * (z - q.z_ref); };
  cdouble integral;
  if (z1 == kInf) {
    if (!(c.real() < 0.0)) throw internal_error("pair_integral: divergent tail at +inf");
    integral = -std::exp(f(z0)) / c;
  } else if (z0 == -kInf) {
    if (!(c.real() > 0.0)) throw internal_error("pair_integral: divergent tail at -inf");
    integral = std::exp(f(z1)) / c;
  } else if (std::abs(c) * (z1 - z0) < 1e-12) {
    integral = (z1 - z0) * std::exp(f(0.5 * (z0 + z1)));
  } else {
    integral = (std::exp(f(z1)) - std::exp(f(z0))) / c;
  }
  return amp * integral;
}

double norm2_of(const std::vector<ProfilePiece>& pieces) {
  double s = 0.0;
  for (const auto& p : pieces)
    for (const auto& q : pieces) s += pair_integral(p, q).real();
  return s;
}

bool contains(const ProfilePiece& p, double z) {
  if (z < p.z0) return false;
  return p.z1 == kInf ? true : z < p.z1;
}

}  // namespace

void ModeProfile::eval(double z, cdouble& ex, cdouble& ez) const {
  ex = ez = {0.0, 0.0};
  for (const auto& p : pieces) {
    if (!contains(p, z)) continue;
    const cdouble e = std::exp(p.rate * (z - p.z_ref));
    ex += p.amp_x * e;
    ez += p.amp_z * e;
  }
}

double ModeProfile::boundary_residual() const {
  double worst = 0.0;
  for (const auto& b : pieces) {
    const double zb = b.z1;
    if (zb == kInf) continue;
    // interior interface: some piece starts where this one ends
    bool interior = false;
    for (const auto& r : pieces) interior = interior || (r.z0 == zb);
    if (!interior) continue;

    cdouble exl{0, 0}, ezl{0, 0}, exr{0, 0}, ezr{0, 0};
    cdouble eps_l{0, 0}, eps_r{0, 0};
    for (const auto& p : pieces) {
      const bool left = (p.z1 == zb) || (p.z0 < zb && p.z1 > zb);
      const bool right = (p.z0 == zb) || (p.z0 < zb && p.z1 > zb);
      const cdouble e = std::exp(p.rate * (zb - p.z_ref));
      if (left) {
        exl += p.amp_x * e;
        ezl += p.amp_z * e;
        eps_l = p.eps;
      }
      if (right) {
        exr += p.amp_x * e;
        ezr += p.amp_z * e;
        eps_r = p.eps;
      }
    }
    const double sx = std::max({std::abs(exl), std::abs(exr), 1e-300});
    const double sz = std::max({std::abs(eps_l * ezl), std::abs(eps_r * ezr), 1e-300});
    worst = std::max(worst, std::abs(exl - exr) / sx);
    worst = std::max(worst, std::abs(eps_l * ezl - eps_r * ezr) / sz);
  }
  return worst;
}

ModeProfile spp_profile(const PermittivityModel& metal, double omega, const LayerStack& stack) {
  const SppWavevector wv = spp_wavevector_lossless(metal, omega);
  const double k = wv.k, nu = wv.nu, nu0 = wv.nu0;
  const double d = stack.d;
  const double em = eval_lossless(metal, omega);

  ModeProfile prof;
  if (stack.geometry == Geometry::Otto) {
    // air below the interface (grows toward z=d), metal above (decays)
    prof.pieces.push_back({-kInf, d, d, {0, 1}, {k / nu0, 0}, {nu0, 0}, {1.0, 0.0}});
    prof.pieces.push_back({d, kInf, d, {0, 1}, {-k / nu, 0}, {-nu, 0}, {em, 0.0}});
  } else {
    // KR: metal below (grows toward z=d), air above (decays); nu <-> nu0
    prof.pieces.push_back({-kInf, d, d, {0, 1}, {k / nu, 0}, {nu, 0}, {em, 0.0}});
    prof.pieces.push_back({d, kInf, d, {0, 1}, {-k / nu0, 0}, {-nu0, 0}, {1.0, 0.0}});
  }
  // closed form: (1 + k^2/nu^2)/(2 nu) + (1 + k^2/nu0^2)/(2 nu0)
  prof.norm = std::sqrt((1.0 + k * k / (nu * nu)) / (2.0 * nu) +
                        (1.0 + k * k / (nu0 * nu0)) / (2.0 * nu0));
  return prof;
}

ThreeLayerResult three_layer_profile(const LayerStack& stack, double omega, double theta,
                                     MetalResponse response) {
  if (!(omega > 0.0)) throw domain_error("three_layer_profile: omega must be > 0");
  if (theta < 0.0 || theta > pi / 2.0)
    throw domain_error("three_layer_profile: theta must lie in [0, pi/2]");

  const double wc = omega / speed_of_light;
  const cdouble e2 = response == MetalResponse::Lossy
                         ? stack.eps2_lossy(omega)
                         : cdouble(stack.eps2_lossless(omega), 0.0);
  const cdouble e3 = response == MetalResponse::Lossy
                         ? stack.eps3_lossy(omega)
                         : cdouble(stack.eps3_lossless(omega), 0.0);
  const double kappa = std::sqrt(stack.eps1) * wc * std::sin(theta);
  const double kz1 = std::sqrt(stack.eps1) * wc * std::cos(theta);
  const cdouble g2 = sqrt_decaying(cdouble(kappa * kappa, 0.0) - e2 * wc * wc);
  const cdouble g3 = sqrt_decaying(cdouble(kappa * kappa, 0.0) - e3 * wc * wc);
  const cdouble p2 = g2 / e2;
  const cdouble p3 = g3 / e3;
  const double q1 = kz1 / stack.eps1;
  const double d = stack.d;
  const cdouble em = std::exp(-g2 * d);  // only decaying exponentials appear
  const cdouble i1(0.0, 1.0);

  // Unknowns (r, A2, v, A3): H_y is A2 e^{-g2 z} + v e^{+g2 (z-d)} in layer II
  // and A3 e^{-g3 (z-d)} in layer III; unit incident amplitude in the prism.
  Eigen::Matrix4cd M;
  Eigen::Vector4cd rhs;
  M << -1.0, 1.0, em, 0.0,
       q1, i1 * p2, -i1 * p2 * em, 0.0,
       0.0, em, 1.0, -1.0,
       0.0, -p2 * em, p2, p3;
  rhs << 1.0, q1, 0.0, 0.0;

  const Eigen::Vector4cd sol = M.partialPivLu().solve(rhs);
  const double resid = (M * sol - rhs).cwiseAbs().maxCoeff();
  if (!(resid < 1e-8 * std::max(1.0, rhs.cwiseAbs().maxCoeff())) || !sol.allFinite())
    throw no_solution_error("three_layer_profile: singular boundary system");

  const cdouble r = sol(0), A2 = sol(1), v = sol(2), A3 = sol(3);

  ThreeLayerResult out;
  out.degenerate_normal_incidence = (theta == 0.0);

  // E-field pieces (common 1/(w eps0) factor dropped):
  //   H = A e^{-g z}  ->  E = ( i g, -kappa) A / eps
  //   H = B e^{+g z}  ->  E = (-i g, -kappa) B / eps
  out.psi.pieces.push_back({0.0, d, 0.0, i1 * g2 * A2 / e2, -kappa * A2 / e2, -g2, e2});
  out.psi.pieces.push_back({0.0, d, d, -i1 * g2 * v / e2, -kappa * v / e2, g2, e2});
  out.psi.pieces.push_back({d, kInf, d, i1 * g3 * A3 / e3, -kappa * A3 / e3, -g3, e3});
  out.psi.norm = std::sqrt(norm2_of(out.psi.pieces));

  out.phi = {out.psi.pieces[0].amp_x, out.psi.pieces[1].amp_x,
             out.psi.pieces[0].amp_z, out.psi.pieces[1].amp_z,
             out.psi.pieces[2].amp_x, out.psi.pieces[2].amp_z};

  out.r_raw = r;
  out.tau_raw = A3;
  const double s = std::sqrt(std::norm(r) + std::norm(A3));
  if (!(s > 0.0)) throw no_solution_error("three_layer_profile: vanishing response");
  out.fresnel = FresnelPair{r / s, A3 / s};
  return out;
}

cdouble overlap(const ModeProfile& a, const ModeProfile& b) {
  if (!(a.norm > 0.0) || !(b.norm > 0.0))
    throw domain_error("overlap: profiles must have positive norm");
  cdouble s{0.0, 0.0};
  for (const auto& p : a.pieces)
    for (const auto& q : b.pieces) s += pair_integral(p, q);
  const cdouble result = s / (a.norm * b.norm);
  if (std::abs(result) > 1.0 + 1e-9)
    throw internal_error("overlap: |result| > 1, normalization bug");
  return result;
}

double profile_norm_quadrature(const ModeProfile& p, double lo, double hi, double tol) {
  auto f = [&](double z) {
    cdouble ex, ez;
    p.eval(z, ex, ez);
    return std::norm(ex) + std::norm(ez);
  };
  return std::sqrt(detail::adaptive_simpson(f, lo, hi, tol, 60));
}

}  // namespace spp
