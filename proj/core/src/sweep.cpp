#include "ratelab/sweep.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ratelab/parallel.hpp"

namespace ratelab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double signed_rate(SweepModel model, const ChannelPair& channel,
                   const SweepSpec& spec, std::optional<Intensities>* mu_out) {
  switch (model) {
    case SweepModel::Dv: {
      const Optimum opt = optimize_intensities(channel, spec.dv, spec.optimizer);
      if (mu_out) *mu_out = opt.mu;
      return opt.rate;
    }
    case SweepModel::Cv:
      return cv_key_rate(channel, spec.cv).rate;
    case SweepModel::Tgw:
      return tgw_bound(channel);
  }
  throw DomainError("unknown sweep model");
}

}  // namespace

void SweepSpec::validate() const {
  if (!(std::isfinite(start)) || !(std::isfinite(stop)) || !(start < stop)) {
    throw DomainError("sweep requires start < stop, got [" +
                      std::to_string(start) + ", " + std::to_string(stop) +
                      "]");
  }
  if (points < 2) {
    throw DomainError("sweep requires points >= 2, got " +
                      std::to_string(points));
  }
  if (start < 0.0) {
    throw DomainError("sweep start must be >= 0, got " + std::to_string(start));
  }
  if (model == SweepModel::Tgw && start <= 0.0) {
    throw DomainError(
        "TGW sweeps must start at positive loss; the bound diverges at zero");
  }
  fiber.validate();
  dv.validate();
  cv.validate();
  optimizer.validate();
}

RateSeries run_sweep(const SweepSpec& spec) {
  spec.validate();
  RateSeries series{spec, std::vector<RateRow>(spec.points)};
  detail::parallel_for(series.rows.size(), [&](std::size_t i) {
    const double abscissa =
        spec.start + (spec.stop - spec.start) *
                         (static_cast<double>(i) / (spec.points - 1));
    const double total_db = spec.axis == SweepAxis::DistanceKm
                                ? abscissa * spec.fiber.alpha_db_per_km
                                : abscissa;
    const ChannelPair channel = channel_from_total_loss(total_db, spec.scenario);
    RateRow row{abscissa, total_db,   channel.eta_a(), channel.eta_b(),
                kNaN,     kNaN,       std::nullopt,    RowStatus::Ok};
    try {
      row.rate_signed = signed_rate(spec.model, channel, spec, &row.mu);
      row.rate_clamped = row.rate_signed > 0.0 ? row.rate_signed : 0.0;
    } catch (const ModelDomainError&) {
      row.status = RowStatus::Invalid;
    }
    series.rows[i] = row;
  });
  return series;
}

double find_cutoff(SweepModel model, Scenario scenario,
                   const DvDeviceParams& dv, const CvDeviceParams& cv,
                   const OptimizerConfig& optimizer, double lo_db,
                   double hi_db, double tol_db) {
  if (!(lo_db >= 0.0) || !(hi_db > lo_db) || !(tol_db > 0.0)) {
    throw DomainError("cutoff bracket requires 0 <= lo < hi and tol > 0");
  }
  SweepSpec params;  // carries the device parameters for signed_rate
  params.dv = dv;
  params.cv = cv;
  params.optimizer = optimizer;
  auto rate = [&](double loss_db) {
    return signed_rate(model, channel_from_total_loss(loss_db, scenario),
                       params, nullptr);
  };

  if (!(rate(lo_db) > 0.0)) {
    throw BracketError(BracketError::Kind::NoPositiveRateAtStart,
                       "rate is not positive at " + std::to_string(lo_db) +
                           " dB; no cutoff bracket");
  }
  if (!(rate(hi_db) < 0.0)) {
    throw BracketError(BracketError::Kind::NoSignChangeByEnd,
                       "rate is still positive at " + std::to_string(hi_db) +
                           " dB; cutoff lies beyond the bracket");
  }
  double lo = lo_db;
  double hi = hi_db;
  while (hi - lo > tol_db) {
    const double mid = 0.5 * (lo + hi);
    (rate(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double advantage_ratio(double total_loss_db, const CvDeviceParams& cv,
                       const DvDeviceParams& dv, Scenario scenario,
                       const OptimizerConfig& optimizer) {
  const ChannelPair channel = channel_from_total_loss(total_loss_db, scenario);
  double rate_cv = 0.0;
  try {
    rate_cv = cv_key_rate(channel, cv).rate;
  } catch (const ModelDomainError&) {
    throw UndefinedRatioError(
        "CV rate is undefined at " + std::to_string(total_loss_db) + " dB");
  }
  const double rate_dv = optimize_intensities(channel, dv, optimizer).rate;
  if (!(rate_cv > 0.0) || !(rate_dv > 0.0)) {
    throw UndefinedRatioError(
        "advantage ratio needs both rates positive at " +
        std::to_string(total_loss_db) + " dB (CV=" + std::to_string(rate_cv) +
        ", DV=" + std::to_string(rate_dv) + ")");
  }
  return rate_cv / rate_dv;
}

}  // namespace ratelab
