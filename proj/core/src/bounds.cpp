#include "ratelab/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace ratelab {

double tgw_bound(const ChannelPair& channel) {
  const double eta = channel.eta_a() * channel.eta_b();
  if (eta >= 1.0) return std::numeric_limits<double>::infinity();
  // log1p keeps full accuracy down to vanishing transmittance.
  return (std::log1p(eta) - std::log1p(-eta)) / std::numbers::ln2;
}

}  // namespace ratelab
