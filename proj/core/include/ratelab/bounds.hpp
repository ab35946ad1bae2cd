#pragma once

#include "ratelab/channel.hpp"

namespace ratelab {

/// Fundamental repeaterless upper bound per optical mode over a lossy
/// channel of end-to-end transmittance eta_a * eta_b:
///   log2((1 + eta) / (1 - eta)).
/// Returns +infinity at unit transmittance (documented sentinel, no throw).
double tgw_bound(const ChannelPair& channel);

}  // namespace ratelab
