#include "ratelab/cv_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ratelab/math.hpp"

namespace ratelab {

namespace {

// Euler's number; spelled out to keep it apart from the DV misalignment e_d.
constexpr double kEuler = std::numbers::e;

void require_lit_arms(const ChannelPair& channel) {
  if (channel.eta_a() <= 0.0 || channel.eta_b() <= 0.0) {
    throw DomainError("CV model requires nonzero transmittance on both arms");
  }
}

}  // namespace

void CvDeviceParams::validate() const {
  if (!(eta_d > 0.0 && eta_d <= 1.0)) {
    throw DomainError("eta_d must lie in (0, 1], got " + std::to_string(eta_d));
  }
  if (!(std::isfinite(epsilon)) || epsilon < 0.0) {
    throw DomainError("epsilon must be >= 0, got " + std::to_string(epsilon));
  }
  if (!(std::isfinite(phi)) || phi <= 0.0) {
    throw DomainError("phi must be > 0, got " + std::to_string(phi));
  }
  if (!(xi > 0.0 && xi <= 1.0)) {
    throw DomainError("xi must lie in (0, 1], got " + std::to_string(xi));
  }
}

bool cv_arms_degenerate(const ChannelPair& channel) noexcept {
  const double hi = std::max(channel.eta_a(), channel.eta_b());
  if (hi == 0.0) return true;
  return std::abs(channel.eta_a() - channel.eta_b()) / hi <
         kCvDegeneracyThreshold;
}

double equivalent_noise(const ChannelPair& channel, const CvDeviceParams& dev) {
  dev.validate();
  require_lit_arms(channel);
  if (cv_arms_degenerate(channel)) {
    const double eta = 0.5 * (channel.eta_a() + channel.eta_b());
    return 4.0 / (eta * dev.eta_d) + dev.epsilon;
  }
  const double sum = channel.eta_a() + channel.eta_b();
  return 2.0 * sum / (channel.eta_a() * channel.eta_b() * dev.eta_d) +
         dev.epsilon;
}

double mutual_info_ab(double chi, const CvDeviceParams& dev) {
  dev.validate();
  if (!(chi > 0.0)) {
    throw DomainError("chi must be > 0, got " + std::to_string(chi));
  }
  return std::log2((dev.phi + 1.0) / chi);
}

double eve_info_asymmetric(const ChannelPair& channel,
                           const CvDeviceParams& dev) {
  dev.validate();
  require_lit_arms(channel);
  if (cv_arms_degenerate(channel)) {
    throw DomainError(
        "arm transmittances are degenerate; use the symmetric branch");
  }
  const double ea = channel.eta_a();
  const double eb = channel.eta_b();
  const double sum = ea + eb;
  const double gap = std::abs(ea - eb);
  const double chi = equivalent_noise(channel, dev);

  // Entropy arguments of the joint and conditional states seen by Eve,
  // plus the log-term scale. Perfect devices put the arguments exactly on
  // the h-domain boundary; values a rounding step below 1 are snapped back.
  auto snap_unit = [](double v) {
    return (v < 1.0 && v > 1.0 - 1e-12) ? 1.0 : v;
  };
  const double nu_joint = snap_unit((ea * eb * chi - sum * sum) / (gap * sum));
  const double nu_cond = snap_unit((ea * chi - sum) / sum);
  const double scale = kEuler * gap * (dev.phi + 1.0) / (2.0 * sum);

  if (nu_joint < 1.0 || nu_cond < 1.0) {
    throw ModelDomainError(
        "outside the validity region of the asymmetric attack analysis "
        "(entropy argument below 1: nu_joint=" +
        std::to_string(nu_joint) + ", nu_cond=" + std::to_string(nu_cond) +
        ")");
  }
  return h_function(nu_joint) + std::log2(scale) - h_function(nu_cond);
}

double eve_info_symmetric(const ChannelPair& channel,
                          const CvDeviceParams& dev) {
  dev.validate();
  require_lit_arms(channel);
  const double chi = 4.0 / (0.5 * (channel.eta_a() + channel.eta_b()) *
                            dev.eta_d) +
                     dev.epsilon;
  if (!(chi > 4.0)) {
    throw ModelDomainError(
        "chi <= 4 (perfect-device singular limit): the symmetric closed "
        "form is undefined, chi=" +
        std::to_string(chi));
  }
  const double log_term =
      std::log2(kEuler * kEuler * (chi - 4.0) * (dev.phi + 1.0) / 16.0);
  return log_term - h_function(0.5 * chi - 1.0);
}

CvRateBreakdown cv_key_rate(const ChannelPair& channel,
                            const CvDeviceParams& dev) {
  const CvBranch branch = cv_arms_degenerate(channel) ? CvBranch::Symmetric
                                                      : CvBranch::Asymmetric;
  const double chi = equivalent_noise(channel, dev);
  const double i_ab = mutual_info_ab(chi, dev);
  const double i_e = branch == CvBranch::Symmetric
                         ? eve_info_symmetric(channel, dev)
                         : eve_info_asymmetric(channel, dev);
  return CvRateBreakdown{chi, i_ab, i_e, dev.xi * i_ab - i_e, branch};
}

}  // namespace ratelab
