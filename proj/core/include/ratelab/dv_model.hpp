#pragma once

#include "ratelab/channel.hpp"
#include "ratelab/math.hpp"

namespace ratelab {

/// Detector and error-correction parameters for the DV protocol.
struct DvDeviceParams {
  double eta_d = 0.93;  ///< detection efficiency per single-photon detector
  double e_d = 0.001;   ///< intrinsic misalignment error rate
  double y0 = 1e-6;     ///< dark count rate per pulse
  double f_e = 1.16;    ///< error-correction inefficiency

  /// \throws DomainError naming the offending field.
  void validate() const;
};

/// Mean photon numbers of Alice's and Bob's signal states.
struct Intensities {
  double mu_a = 0.5;
  double mu_b = 0.5;

  /// \throws DomainError unless both intensities are finite and positive.
  void validate() const;
};

/// Overall gain and QBER in the Z basis for signal pulses.
struct GainQber {
  double gain_z;
  Probability qber_z;
};

/// Everything that goes into one DV key-rate evaluation.
struct DvRateBreakdown {
  double p11;     ///< joint single-photon emission probability
  double y11;     ///< single-photon yield (identical in the Z and X bases)
  double e11x;    ///< single-photon error rate in the X basis
  double gain_z;  ///< overall gain Q^Z
  double qber_z;  ///< overall QBER E^Z
  double rate;    ///< signed secret key rate, bits per pulse pair

  /// Rate clamped at zero, for plotting.
  double secure_rate() const noexcept { return rate > 0.0 ? rate : 0.0; }
};

/// Single-photon yield given that both users emit exactly one photon.
/// Result lies in [0, 1].
double yield_11(const ChannelPair& channel, const DvDeviceParams& dev);

/// Single-photon error rate in the X basis.
/// \throws DegenerateInputError when the yield is zero (no events).
Probability error_11x(const ChannelPair& channel, const DvDeviceParams& dev);

/// Overall gain and QBER for signal pulses of the given intensities.
///
/// Evaluated through an exact rearrangement of the closed form into sums of
/// same-sign terms, so the result stays accurate (relative error ~1e-13)
/// even where the textbook expression suffers catastrophic cancellation
/// (deep loss, small misalignment).
/// \throws DegenerateInputError when the total gain vanishes.
GainQber gain_and_qber(const ChannelPair& channel, const DvDeviceParams& dev,
                       const Intensities& mu);

/// Asymptotic decoy-state DV key rate (infinite decoy states):
///   R = p11 * Y11 * (1 - H2(e11x)) - Q^Z * f_e * H2(E^Z).
/// The signed value is preserved; use DvRateBreakdown::secure_rate() to clamp.
DvRateBreakdown dv_key_rate(const ChannelPair& channel,
                            const DvDeviceParams& dev, const Intensities& mu);

}  // namespace ratelab
