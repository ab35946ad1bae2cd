#pragma once

#include "ratelab/errors.hpp"

namespace ratelab {

/// Relay placement relative to the two users.
enum class Scenario {
  AsymmetricRelayAtAlice,  ///< relay co-located with Alice; all loss on Bob's arm
  Symmetric,               ///< relay in the middle; loss split evenly
};

/// Fiber loss coefficient.
struct FiberSpec {
  double alpha_db_per_km = 0.2;

  /// \throws DomainError unless alpha is finite and positive.
  void validate() const;
};

/// Transmittances of the two optical arms (Alice -> relay, Bob -> relay).
///
/// Zero transmittance is representable (a dark arm); the factory functions
/// below only ever produce values in (0, 1].
class ChannelPair {
 public:
  /// \throws DomainError unless both transmittances lie in [0, 1].
  ChannelPair(double eta_a, double eta_b);

  double eta_a() const noexcept { return eta_a_; }
  double eta_b() const noexcept { return eta_b_; }

 private:
  double eta_a_;
  double eta_b_;
};

/// Converts a loss in dB to a transmittance: 10^(-loss_db / 10).
/// \throws DomainError for negative or non-finite loss.
double transmittance_from_loss(double loss_db);

/// Builds the channel for a given total system loss. The asymmetric scenario
/// puts the whole loss on Bob's arm; the symmetric scenario splits it evenly.
ChannelPair channel_from_total_loss(double total_loss_db, Scenario scenario);

/// Builds the channel from per-arm fiber lengths in km.
ChannelPair channel_from_distances(double l_a_km, double l_b_km,
                                   FiberSpec fiber = {});

}  // namespace ratelab
