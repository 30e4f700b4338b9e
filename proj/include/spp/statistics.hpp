#pragma once

#include <vector>

namespace spp {

struct CountingMoments {
  double mean;              // <m>
  double factorial_second;  // <m(m-1)>

  /// g2(0) = <m(m-1)> / <m>^2; domain_error if mean == 0.
  double g2() const;
};

/// Ordered per-stage efficiencies (transfer |beta|^2, propagation e^{-2 kappa0 x},
/// detector mu, ...). Each eta in [0, 1].
struct LossChain {
  std::vector<double> etas;

  LossChain() = default;
  explicit LossChain(std::vector<double> e);
  double total() const;
};

/// 1 - 1/n for an n-photon Fock wavepacket; domain_error for n < 1.
double g2_fock(int n);

/// Moments after the chain: mean = eta_tot * n, <m(m-1)> = eta_tot^2 n(n-1).
CountingMoments apply_loss_chain(int n, const LossChain& chain);

/// Exact photon-number distribution through per-stage binomial loss channels
/// P(k|j) = C(j,k) eta^k (1-eta)^(j-k); moments from the final distribution.
/// Limits: n <= 20, chain length <= 8 (scale_error beyond).
CountingMoments fock_loss_oracle(int n, const LossChain& chain);

/// Full output distribution (size n+1), exposed for distribution-level tests.
std::vector<double> fock_loss_distribution(int n, const LossChain& chain);

enum class CoherenceClass { Nonclassical, ClassicalCompatible };

/// value < 1 is impossible for classical fields.
CoherenceClass g2_classical_bound_check(double value);

const char* to_string(CoherenceClass c);

}  // namespace spp
