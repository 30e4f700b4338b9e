#include "spp/statistics.hpp"

#include <array>
#include <cmath>
#include <cstddef>

#include "spp/errors.hpp"

namespace spp {

namespace {

constexpr int kMaxN = 20;
constexpr std::size_t kMaxChain = 8;

void validate_eta(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw domain_error("loss chain: eta must lie in [0, 1]");
}

// Pascal triangle up to n = 20; all values exact in double.
double binomial(int n, int k) {
  static const auto table = [] {
    std::array<std::array<double, kMaxN + 1>, kMaxN + 1> c{};
    for (int i = 0; i <= kMaxN; ++i) {
      c[i][0] = c[i][i] = 1.0;
      for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    return c;
  }();
  return table[n][k];
}

}  // namespace

double CountingMoments::g2() const {
  if (!(mean > 0.0)) throw domain_error("g2: undefined for <m> = 0");
  return factorial_second / (mean * mean);
}

LossChain::LossChain(std::vector<double> e) : etas(std::move(e)) {
  for (double eta : etas) validate_eta(eta);
}

double LossChain::total() const {
  double t = 1.0;
  for (double eta : etas) t *= eta;
  return t;
}

double g2_fock(int n) {
  if (n < 1) throw domain_error("g2_fock: n must be >= 1");
  return 1.0 - 1.0 / static_cast<double>(n);
}

CountingMoments apply_loss_chain(int n, const LossChain& chain) {
  if (n < 0) throw domain_error("apply_loss_chain: n must be >= 0");
  for (double eta : chain.etas) validate_eta(eta);
  const double eta = chain.total();
  const double dn = static_cast<double>(n);
  return CountingMoments{eta * dn, eta * eta * dn * (dn - 1.0)};
}

std::vector<double> fock_loss_distribution(int n, const LossChain& chain) {
  if (n < 0) throw domain_error("fock_loss_distribution: n must be >= 0");
  if (n > kMaxN) throw scale_error("fock_loss_distribution: n must be <= 20");
  if (chain.etas.size() > kMaxChain)
    throw scale_error("fock_loss_distribution: chain length must be <= 8");
  for (double eta : chain.etas) validate_eta(eta);

  std::vector<double> p(n + 1, 0.0);
  p[n] = 1.0;
  for (double eta : chain.etas) {
    std::vector<double> next(n + 1, 0.0);
    for (int j = 0; j <= n; ++j) {
      if (p[j] == 0.0) continue;
      for (int k = 0; k <= j; ++k)
        next[k] += p[j] * binomial(j, k) * std::pow(eta, k) * std::pow(1.0 - eta, j - k);
    }
    p = std::move(next);
  }
  return p;
}

CountingMoments fock_loss_oracle(int n, const LossChain& chain) {
  const std::vector<double> p = fock_loss_distribution(n, chain);
  double mean = 0.0, fact2 = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    mean += static_cast<double>(k) * p[k];
    fact2 += static_cast<double>(k) * (static_cast<double>(k) - 1.0) * p[k];
  }
  return CountingMoments{mean, fact2};
}

CoherenceClass g2_classical_bound_check(double value) {
  if (value < 0.0) throw domain_error("g2_classical_bound_check: value must be >= 0");
  return value < 1.0 ? CoherenceClass::Nonclassical : CoherenceClass::ClassicalCompatible;
}

const char* to_string(CoherenceClass c) {
  return c == CoherenceClass::Nonclassical ? "nonclassical" : "classical-compatible";
}

}  // namespace spp
