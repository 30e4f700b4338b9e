#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "spp/errors.hpp"
#include "spp/statistics.hpp"

using namespace spp;

TEST_CASE("g2_fock values") {
  CHECK(g2_fock(1) == 0.0);
  CHECK(g2_fock(2) == 0.5);
  CHECK(g2_fock(1000000) == doctest::Approx(1.0 - 1e-6).epsilon(1e-12));
  CHECK(g2_fock(1000000) < 1.0);
  CHECK_THROWS_AS(g2_fock(0), spp::domain_error);
}

TEST_CASE("apply_loss_chain arithmetic") {
  const LossChain chain{{0.9, 0.5, 0.65}};
  const CountingMoments m = apply_loss_chain(3, chain);
  const double eta = 0.9 * 0.5 * 0.65;
  CHECK(m.mean == doctest::Approx(eta * 3.0).epsilon(1e-14));
  CHECK(m.mean == doctest::Approx(0.8775).epsilon(1e-12));
  CHECK(m.factorial_second == doctest::Approx(eta * eta * 6.0).epsilon(1e-14));
  CHECK(m.factorial_second == doctest::Approx(0.5133375).epsilon(1e-10));
  CHECK(m.g2() == doctest::Approx(g2_fock(3)).epsilon(1e-12));

  const CountingMoments id = apply_loss_chain(5, LossChain{});
  CHECK(id.mean == 5.0);
  CHECK(id.factorial_second == 20.0);

  CHECK(apply_loss_chain(1, chain).g2() == 0.0);
  CHECK_THROWS_AS(apply_loss_chain(2, LossChain{{1.5}}), spp::domain_error);
  CHECK_THROWS_AS(apply_loss_chain(-1, chain), spp::domain_error);
}

TEST_CASE("fock_loss_oracle: hand-enumerated n=2, eta=1/2") {
  const auto p = fock_loss_distribution(2, LossChain{{0.5}});
  REQUIRE(p.size() == 3);
  CHECK(p[0] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p[2] == doctest::Approx(0.25).epsilon(1e-15));
  const CountingMoments m = fock_loss_oracle(2, LossChain{{0.5}});
  CHECK(m.mean == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(m.factorial_second == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(m.g2() == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("fock_loss_oracle: single excitation cannot pair") {
  for (const auto& etas :
       {std::vector<double>{}, std::vector<double>{0.3}, std::vector<double>{0.9, 0.2, 0.7}}) {
    const CountingMoments m = fock_loss_oracle(1, LossChain{etas});
    CHECK(m.factorial_second == 0.0);
  }
}

TEST_CASE("binomial composition: two stages equal their product, full distribution") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> ue(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double e1 = ue(rng), e2 = ue(rng);
    const int n = 1 + static_cast<int>(ue(rng) * 19);
    const auto two = fock_loss_distribution(n, LossChain{{e1, e2}});
    const auto one = fock_loss_distribution(n, LossChain{{e1 * e2}});
    REQUIRE(two.size() == one.size());
    for (std::size_t k = 0; k < two.size(); ++k)
      CHECK(std::abs(two[k] - one[k]) <= 1e-12);
  }
}

TEST_CASE("chain-order invariance of the full distribution") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ue(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> etas = {ue(rng), ue(rng), ue(rng), ue(rng)};
    const int n = 1 + static_cast<int>(ue(rng) * 19);
    const auto a = fock_loss_distribution(n, LossChain{etas});
    std::reverse(etas.begin(), etas.end());
    const auto b = fock_loss_distribution(n, LossChain{etas});
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-13);
  }
}

TEST_CASE("loss invariance of g2 (core claim) and moments consistency") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> ue(0.05, 1.0);
  std::uniform_int_distribution<int> ulen(0, 8);
  for (int n = 1; n <= 20; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<double> etas(ulen(rng));
      for (auto& e : etas) e = ue(rng);
      const LossChain chain{etas};
      const CountingMoments oracle = fock_loss_oracle(n, chain);
      const CountingMoments closed = apply_loss_chain(n, chain);
      CHECK(std::abs(oracle.mean - closed.mean) <= 1e-12 * std::max(1.0, closed.mean));
      CHECK(std::abs(oracle.factorial_second - closed.factorial_second) <=
            1e-12 * std::max(1.0, closed.factorial_second));
      if (oracle.mean > 0.0) {
        CHECK(std::abs(oracle.g2() - g2_fock(n)) <= 1e-12);
        CHECK(g2_classical_bound_check(oracle.g2()) == CoherenceClass::Nonclassical);
      }
    }
  }
}

TEST_CASE("scale limits") {
  CHECK_THROWS_AS(fock_loss_oracle(21, LossChain{{0.5}}), spp::scale_error);
  CHECK_THROWS_AS(fock_loss_oracle(5, LossChain{{0.9, 0.9, 0.9, 0.9, 0.9, 0.9, 0.9, 0.9, 0.9}}),
                  spp::scale_error);
}

TEST_CASE("classical bound classification") {
  CHECK(g2_classical_bound_check(0.0) == CoherenceClass::Nonclassical);
  CHECK(g2_classical_bound_check(1.0) == CoherenceClass::ClassicalCompatible);
  CHECK(g2_classical_bound_check(2.7) == CoherenceClass::ClassicalCompatible);
  for (int n = 1; n <= 50; ++n)
    CHECK(g2_classical_bound_check(1.0 - 1.0 / n) == CoherenceClass::Nonclassical);
  CHECK_THROWS_AS(g2_classical_bound_check(-0.1), spp::domain_error);
}
