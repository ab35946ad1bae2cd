#pragma once

#include "ratelab/dv_model.hpp"

namespace ratelab {

/// Deterministic search configuration for the signal-intensity optimum.
struct OptimizerConfig {
  double mu_min = 1e-4;
  double mu_max = 1.0;
  int grid_points = 40;           ///< per axis, log-spaced
  int refine_iterations = 200;    ///< simplex descent steps
  double refine_tolerance = 1e-10;///< convergence window on the rate
  unsigned seed = 0;              ///< seeds the optional stochastic restarts
  int random_restarts = 0;        ///< 0 = deterministic grid + simplex only

  /// \throws DomainError unless 0 < mu_min < mu_max and grid_points >= 2.
  void validate() const;
};

/// Result of an intensity optimization.
struct Optimum {
  Intensities mu;
  double rate = 0.0;       ///< signed rate at the optimum, bits per pulse pair
  long evaluations = 0;    ///< number of key-rate evaluations spent
  bool positive_rate = false;  ///< false flags a "no positive rate" outcome
};

/// Maximizes the DV key rate over (mu_a, mu_b) in [mu_min, mu_max]^2:
/// coarse log-spaced grid scan, then simplex descent from the best cell.
/// Deterministic for a fixed config; grid ties break toward smaller mu_a,
/// then smaller mu_b. The returned rate never falls below the best grid
/// point. When every probe is non-positive the best (negative) point is
/// returned with positive_rate = false.
Optimum optimize_intensities(const ChannelPair& channel,
                             const DvDeviceParams& dev,
                             const OptimizerConfig& cfg = {});

}  // namespace ratelab
