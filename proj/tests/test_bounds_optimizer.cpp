#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "ratelab/bounds.hpp"
#include "ratelab/optimizer.hpp"

using namespace ratelab;

TEST_CASE("tgw bound reference values") {
  CHECK(tgw_bound(ChannelPair(0, 0)) == 0.0);
  CHECK(tgw_bound(ChannelPair(1.0, 1.0 / 3.0)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(tgw_bound(channel_from_total_loss(4.0, Scenario::Symmetric)) ==
        doctest::Approx(1.2158964187069462).epsilon(1e-13));
  CHECK(tgw_bound(ChannelPair(1, 1)) ==
        std::numeric_limits<double>::infinity());
}

TEST_CASE("optimizer config validation") {
  OptimizerConfig bad;
  bad.mu_min = 0.5;
  bad.mu_max = 0.1;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = OptimizerConfig{};
  bad.grid_points = 1;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("optimum at the reference channel") {
  const ChannelPair ch = channel_from_total_loss(4.0, Scenario::Symmetric);
  const Optimum best = optimize_intensities(ch, DvDeviceParams{});
  CHECK(best.positive_rate);
  CHECK(best.rate == doctest::Approx(0.0195954995).epsilon(1e-6));
  // symmetric channel: optimum is (near) symmetric in the intensities
  CHECK(std::abs(best.mu.mu_a - best.mu.mu_b) / best.mu.mu_a < 0.05);
  CHECK(best.evaluations > 0);
}

TEST_CASE("two runs are bit-identical") {
  const ChannelPair ch =
      channel_from_total_loss(7.3, Scenario::AsymmetricRelayAtAlice);
  OptimizerConfig cfg;
  cfg.random_restarts = 3;
  cfg.seed = 1234;
  const Optimum a = optimize_intensities(ch, DvDeviceParams{}, cfg);
  const Optimum b = optimize_intensities(ch, DvDeviceParams{}, cfg);
  CHECK(a.rate == b.rate);
  CHECK(a.mu.mu_a == b.mu.mu_a);
  CHECK(a.mu.mu_b == b.mu.mu_b);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("refined rate dominates the coarse grid and fixed probes") {
  const DvDeviceParams dev{};
  std::mt19937 rng(5050);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const double loss = 20.0 * unit(rng);
    const Scenario sc = trial % 2 == 0 ? Scenario::Symmetric
                                       : Scenario::AsymmetricRelayAtAlice;
    const ChannelPair ch = channel_from_total_loss(loss, sc);
    OptimizerConfig cfg;
    cfg.grid_points = 12;
    const Optimum best = optimize_intensities(ch, dev, cfg);

    double grid_best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < cfg.grid_points; ++i) {
      for (int j = 0; j < cfg.grid_points; ++j) {
        auto mu_at = [&](int k) {
          return k == cfg.grid_points - 1
                     ? cfg.mu_max
                     : cfg.mu_min * std::pow(cfg.mu_max / cfg.mu_min,
                                             static_cast<double>(k) /
                                                 (cfg.grid_points - 1));
        };
        grid_best = std::max(
            grid_best,
            dv_key_rate(ch, dev, Intensities{mu_at(i), mu_at(j)}).rate);
      }
    }
    CHECK(best.rate >= grid_best);
  }
  // optimality against an arbitrary fixed probe at zero loss
  const Optimum zero = optimize_intensities(ChannelPair(1, 1), dev);
  CHECK(zero.rate >=
        dv_key_rate(ChannelPair(1, 1), dev, Intensities{0.5, 0.5}).rate);
}

TEST_CASE("optimizer is within 1% of a dense brute-force scan") {
  std::mt19937 rng(808);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const DvDeviceParams dev{};
  for (int trial = 0; trial < 10; ++trial) {
    const double loss = 25.0 * unit(rng);
    const Scenario sc = unit(rng) < 0.5 ? Scenario::Symmetric
                                        : Scenario::AsymmetricRelayAtAlice;
    const ChannelPair ch = channel_from_total_loss(loss, sc);
    const Optimum best = optimize_intensities(ch, dev);

    double brute = -std::numeric_limits<double>::infinity();
    const int n = 200;
    for (int i = 0; i < n; ++i) {
      const double ma = 1e-4 * std::pow(1.0 / 1e-4, i / (n - 1.0));
      for (int j = 0; j < n; ++j) {
        const double mb = 1e-4 * std::pow(1.0 / 1e-4, j / (n - 1.0));
        brute = std::max(brute,
                         dv_key_rate(ch, dev, Intensities{ma, mb}).rate);
      }
    }
    CAPTURE(loss);
    CHECK(best.rate >= brute * (1.0 - 0.01) - 1e-15);
  }
}

TEST_CASE("the optimum stays interior to the unit box on a wider scan") {
  // acceptance-scenario channels, scanned over intensities up to 3
  const DvDeviceParams dev{};
  for (const double loss : {2.5, 3.0, 4.0, 5.0}) {
    for (const Scenario sc :
         {Scenario::Symmetric, Scenario::AsymmetricRelayAtAlice}) {
      const ChannelPair ch = channel_from_total_loss(loss, sc);
      double best = -std::numeric_limits<double>::infinity();
      double arg_a = 0.0;
      double arg_b = 0.0;
      const int n = 80;
      for (int i = 0; i < n; ++i) {
        const double ma = 1e-4 * std::pow(3.0 / 1e-4, i / (n - 1.0));
        for (int j = 0; j < n; ++j) {
          const double mb = 1e-4 * std::pow(3.0 / 1e-4, j / (n - 1.0));
          const double r = dv_key_rate(ch, dev, Intensities{ma, mb}).rate;
          if (r > best) {
            best = r;
            arg_a = ma;
            arg_b = mb;
          }
        }
      }
      CAPTURE(loss);
      CHECK(arg_a < 1.0);
      CHECK(arg_b < 1.0);
    }
  }
}

TEST_CASE("hopeless channels flag no positive rate") {
  // heavy loss with a large dark-count floor: negative everywhere
  const ChannelPair ch = channel_from_total_loss(40.0, Scenario::Symmetric);
  const Optimum best =
      optimize_intensities(ch, DvDeviceParams{0.93, 0.001, 1e-2, 1.16});
  CHECK_FALSE(best.positive_rate);
  CHECK(best.rate < 0.0);
}
