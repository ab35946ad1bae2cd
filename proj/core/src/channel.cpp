#include "ratelab/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ratelab {

void FiberSpec::validate() const {
  if (!(std::isfinite(alpha_db_per_km)) || alpha_db_per_km <= 0.0) {
    throw DomainError("alpha must be a positive loss coefficient in dB/km, got " +
                      std::to_string(alpha_db_per_km));
  }
}

ChannelPair::ChannelPair(double eta_a, double eta_b)
    : eta_a_(eta_a), eta_b_(eta_b) {
  if (!(eta_a >= 0.0 && eta_a <= 1.0)) {
    throw DomainError("eta_a must lie in [0, 1], got " + std::to_string(eta_a));
  }
  if (!(eta_b >= 0.0 && eta_b <= 1.0)) {
    throw DomainError("eta_b must lie in [0, 1], got " + std::to_string(eta_b));
  }
}

double transmittance_from_loss(double loss_db) {
  if (!(std::isfinite(loss_db)) || loss_db < 0.0) {
    throw DomainError("loss_db must be finite and >= 0, got " +
                      std::to_string(loss_db));
  }
  return std::min(1.0, std::pow(10.0, -loss_db / 10.0));
}

ChannelPair channel_from_total_loss(double total_loss_db, Scenario scenario) {
  if (scenario == Scenario::AsymmetricRelayAtAlice) {
    return ChannelPair(1.0, transmittance_from_loss(total_loss_db));
  }
  const double arm = transmittance_from_loss(total_loss_db / 2.0);
  return ChannelPair(arm, arm);
}

ChannelPair channel_from_distances(double l_a_km, double l_b_km,
                                   FiberSpec fiber) {
  fiber.validate();
  if (!(std::isfinite(l_a_km)) || l_a_km < 0.0 || !(std::isfinite(l_b_km)) ||
      l_b_km < 0.0) {
    throw DomainError("fiber lengths must be finite and >= 0");
  }
  return ChannelPair(transmittance_from_loss(fiber.alpha_db_per_km * l_a_km),
                     transmittance_from_loss(fiber.alpha_db_per_km * l_b_km));
}

}  // namespace ratelab
