#pragma once

#include "ratelab/channel.hpp"

namespace ratelab {

/// Relay detection and modulation parameters for the CV protocol,
/// in shot-noise units where applicable.
struct CvDeviceParams {
  double eta_d = 0.98;   ///< relay overall detection efficiency
  double epsilon = 0.01; ///< excess noise
  double phi = 60.0;     ///< modulation variance
  double xi = 0.97;      ///< reconciliation efficiency

  /// \throws DomainError naming the offending field.
  void validate() const;
};

/// Which closed form of Eve's information was used.
enum class CvBranch { Asymmetric, Symmetric };

/// Everything that goes into one CV key-rate evaluation.
struct CvRateBreakdown {
  double chi;      ///< equivalent noise, shot-noise units
  double i_ab;     ///< mutual information, bits
  double i_e;      ///< Eve's information, bits
  double rate;     ///< signed rate xi * I_AB - I_E, bits per use
  CvBranch branch;

  double secure_rate() const noexcept { return rate > 0.0 ? rate : 0.0; }
};

/// Relative transmittance difference below which the two arms are treated
/// as equal and the dedicated symmetric closed form is used. The asymmetric
/// expressions divide by |eta_a - eta_b| and become useless before that.
inline constexpr double kCvDegeneracyThreshold = 1e-9;

/// True when the channel must be handled by the symmetric branch.
bool cv_arms_degenerate(const ChannelPair& channel) noexcept;

/// Equivalent noise referred to the channel input:
///   2 (eta_a + eta_b) / (eta_a eta_b eta_d) + epsilon,
/// which reduces to 4 / (eta eta_d) + epsilon for equal arms.
/// \throws DomainError on zero transmittance.
double equivalent_noise(const ChannelPair& channel, const CvDeviceParams& dev);

/// Mutual information I_AB = log2((phi + 1) / chi).
/// \throws DomainError for chi <= 0.
double mutual_info_ab(double chi, const CvDeviceParams& dev);

/// Eve's information for unequal arms (large-modulation limit).
/// \throws DomainError when the arms are degenerate (use the symmetric form);
/// \throws ModelDomainError when the entropy arguments fall below 1, i.e.
/// outside the region where the underlying attack analysis applies.
double eve_info_asymmetric(const ChannelPair& channel,
                           const CvDeviceParams& dev);

/// Eve's information for equal arms (large-modulation limit).
/// \throws ModelDomainError when chi <= 4 (perfect-device singular limit).
double eve_info_symmetric(const ChannelPair& channel,
                          const CvDeviceParams& dev);

/// CV key rate xi * I_AB - I_E, selecting the branch by the degeneracy
/// threshold. The signed value is preserved.
CvRateBreakdown cv_key_rate(const ChannelPair& channel,
                            const CvDeviceParams& dev);

}  // namespace ratelab
