#pragma once

#include <optional>
#include <vector>

#include "ratelab/bounds.hpp"
#include "ratelab/cv_model.hpp"
#include "ratelab/optimizer.hpp"

namespace ratelab {

enum class SweepModel { Dv, Cv, Tgw };
enum class SweepAxis { TotalLossDb, DistanceKm };

/// One rate-versus-loss (or distance) series request.
struct SweepSpec {
  SweepModel model = SweepModel::Dv;
  Scenario scenario = Scenario::Symmetric;
  SweepAxis axis = SweepAxis::TotalLossDb;
  double start = 0.0;
  double stop = 40.0;
  int points = 81;
  FiberSpec fiber{};
  DvDeviceParams dv{};
  CvDeviceParams cv{};
  OptimizerConfig optimizer{};

  /// \throws DomainError on start >= stop, points < 2, bad parameter ranges,
  /// or a grid that starts at zero loss for the (there unbounded) TGW model.
  void validate() const;
};

enum class RowStatus { Ok, Invalid };

/// One evaluated sweep point. Invalid rows (model-domain errors) are kept,
/// with NaN rates, so a series shows where the model stops applying.
struct RateRow {
  double abscissa;
  double total_loss_db;
  double eta_a;
  double eta_b;
  double rate_signed;   ///< NaN when status != Ok
  double rate_clamped;  ///< max(rate_signed, 0); NaN when status != Ok
  std::optional<Intensities> mu;  ///< optimized intensities (DV only)
  RowStatus status = RowStatus::Ok;
};

struct RateSeries {
  SweepSpec spec;
  std::vector<RateRow> rows;  ///< ascending abscissa, one row per grid point
};

/// Evaluates the requested model across the grid. DV points re-optimize the
/// intensities independently. Points are independent and may be evaluated
/// concurrently; assembly preserves grid order, so repeated runs of the same
/// spec produce identical series.
RateSeries run_sweep(const SweepSpec& spec);

/// Maximum tolerable total loss: bisects the signed rate over
/// [lo_db, hi_db] to within tol_db. DV probes re-optimize the intensities.
/// \throws BracketError when the rate is not positive at lo_db or still
/// positive at hi_db.
double find_cutoff(SweepModel model, Scenario scenario,
                   const DvDeviceParams& dv = {}, const CvDeviceParams& cv = {},
                   const OptimizerConfig& optimizer = {}, double lo_db = 0.0,
                   double hi_db = 40.0, double tol_db = 1e-4);

/// R_CV / R_DV at one total loss, with per-point DV optimization.
/// \throws UndefinedRatioError unless both rates are positive.
double advantage_ratio(double total_loss_db, const CvDeviceParams& cv,
                       const DvDeviceParams& dv, Scenario scenario,
                       const OptimizerConfig& optimizer = {});

}  // namespace ratelab
