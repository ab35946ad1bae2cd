#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "ratelab/sweep.hpp"

namespace ratelab::cli {

/// A file could not be opened or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Device, fiber, and optimizer parameters shared by every command.
/// Defaults are the reference experimental values.
struct CommonModelOptions {
  FiberSpec fiber{};
  DvDeviceParams dv{};
  CvDeviceParams cv{};
  OptimizerConfig optimizer{};
};

struct PointOptions {
  SweepModel model = SweepModel::Dv;
  Scenario scenario = Scenario::Symmetric;
  std::optional<double> loss_db;
  std::optional<double> distance_km;
  std::optional<double> l_a_km;
  std::optional<double> l_b_km;
  bool optimize = false;
  Intensities mu{};
  bool csv = false;
  CommonModelOptions m;
};

struct SweepOptions {
  SweepModel model = SweepModel::Dv;
  Scenario scenario = Scenario::Symmetric;
  SweepAxis axis = SweepAxis::TotalLossDb;
  double start = 0.0;
  double stop = 40.0;
  int points = 81;
  std::optional<std::string> out_path;  ///< default: stdout
  std::optional<std::string> svg_path;
  CommonModelOptions m;
};

struct CutoffOptions {
  SweepModel model = SweepModel::Cv;
  Scenario scenario = Scenario::Symmetric;
  double lo_db = 0.0;
  double hi_db = 40.0;
  double tol_db = 1e-4;
  CommonModelOptions m;
};

struct ReproduceOptions {
  std::string figures = "all";  ///< comma list; ranges like 1a..1d; or "all"
  std::string outdir = ".";
  CommonModelOptions m;
};

const char* model_name(SweepModel model) noexcept;
const char* scenario_name(Scenario scenario) noexcept;

/// Expands a figure selection ("all", "1a,2b", "1a..1d,2a") against the
/// known set {1a, 1b, 1c, 1d, 2a, 2b}. \throws DomainError on unknown names.
std::vector<std::string> expand_figures(const std::string& selection);

int run_point(const PointOptions& opt, std::ostream& out);
int run_sweep_cmd(const SweepOptions& opt, std::ostream& out);
int run_cutoff(const CutoffOptions& opt, std::ostream& out);
int run_reproduce(const ReproduceOptions& opt, std::ostream& out);

}  // namespace ratelab::cli
