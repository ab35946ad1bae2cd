#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <string>

#include "commands.hpp"

namespace {

using ratelab::Scenario;
using ratelab::SweepAxis;
using ratelab::SweepModel;

// Flat "key = value" configuration: keys are routed to whichever subcommand
// was named on the command line, so files need no section headers.
class FlatConfig : public CLI::ConfigTOML {
 public:
  explicit FlatConfig(const CLI::App* root) : root_(root) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::vector<CLI::ConfigItem> items = CLI::ConfigTOML::from_config(input);
    const std::vector<CLI::App*> active = root_->get_subcommands();
    if (!active.empty()) {
      const std::string name = active.front()->get_name();
      for (CLI::ConfigItem& item : items) {
        if (item.parents.empty() && item.name != "config") {
          item.parents = {name};
        }
      }
    }
    return items;
  }

 private:
  const CLI::App* root_;
};

const std::map<std::string, SweepModel> kModels{
    {"dv", SweepModel::Dv}, {"cv", SweepModel::Cv}, {"tgw", SweepModel::Tgw}};
const std::map<std::string, Scenario> kScenarios{
    {"asymmetric", Scenario::AsymmetricRelayAtAlice},
    {"symmetric", Scenario::Symmetric}};
const std::map<std::string, SweepAxis> kAxes{
    {"loss-db", SweepAxis::TotalLossDb}, {"distance-km", SweepAxis::DistanceKm}};

void add_model_options(CLI::App* sub, ratelab::cli::CommonModelOptions& m) {
  sub->add_option("--alpha", m.fiber.alpha_db_per_km,
                  "Fiber loss coefficient, dB/km")
      ->capture_default_str();
  sub->add_option("--dv-eta-d", m.dv.eta_d, "DV detector efficiency")
      ->capture_default_str();
  sub->add_option("--dv-e-d", m.dv.e_d, "DV misalignment error rate")
      ->capture_default_str();
  sub->add_option("--dv-y0", m.dv.y0, "DV dark count rate per pulse")
      ->capture_default_str();
  sub->add_option("--dv-f-e", m.dv.f_e, "DV error-correction inefficiency")
      ->capture_default_str();
  sub->add_option("--cv-eta-d", m.cv.eta_d, "CV relay detection efficiency")
      ->capture_default_str();
  sub->add_option("--cv-epsilon", m.cv.epsilon,
                  "CV excess noise, shot-noise units")
      ->capture_default_str();
  sub->add_option("--cv-phi", m.cv.phi, "CV modulation variance, shot-noise units")
      ->capture_default_str();
  sub->add_option("--cv-xi", m.cv.xi, "CV reconciliation efficiency")
      ->capture_default_str();
  sub->add_option("--opt-mu-min", m.optimizer.mu_min,
                  "Intensity search box lower edge")
      ->capture_default_str();
  sub->add_option("--opt-mu-max", m.optimizer.mu_max,
                  "Intensity search box upper edge")
      ->capture_default_str();
  sub->add_option("--opt-grid-points", m.optimizer.grid_points,
                  "Coarse grid points per axis")
      ->capture_default_str();
  sub->add_option("--opt-refine-iterations", m.optimizer.refine_iterations,
                  "Simplex refinement iterations")
      ->capture_default_str();
  sub->add_option("--opt-refine-tolerance", m.optimizer.refine_tolerance,
                  "Simplex convergence window on the rate")
      ->capture_default_str();
  sub->add_option("--opt-seed", m.optimizer.seed,
                  "Seed for the stochastic restart mode")
      ->capture_default_str();
  sub->add_option("--opt-restarts", m.optimizer.random_restarts,
                  "Seeded random restarts (0 = deterministic search only)")
      ->capture_default_str();
  sub->fallthrough();  // lets --config after the subcommand reach the app
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qkd-ratelab: asymptotic secret-key rates for DV/CV MDI-QKD and the "
      "repeaterless TGW bound.\n"
      "Set QKD_RATELAB_THREADS to cap the sweep worker count."};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<FlatConfig>(&app));
  app.set_config("--config", "",
                 "Flat 'key = value' file with '#' comments; command-line "
                 "flags override file values");
  app.allow_config_extras(CLI::config_extras_mode::error);

  ratelab::cli::PointOptions point;
  CLI::App* point_cmd =
      app.add_subcommand("point", "Evaluate one model at one channel point");
  point_cmd->add_option("--model", point.model, "Model: dv, cv, or tgw")
      ->required()
      ->transform(CLI::CheckedTransformer(kModels, CLI::ignore_case));
  point_cmd->add_option("--scenario", point.scenario, "Relay placement")
      ->transform(CLI::CheckedTransformer(kScenarios, CLI::ignore_case));
  point_cmd->add_option("--loss-db", point.loss_db, "Total system loss, dB");
  point_cmd->add_option("--distance-km", point.distance_km,
                        "Total fiber length, km");
  point_cmd->add_option("--la-km", point.l_a_km, "Alice-relay fiber, km");
  point_cmd->add_option("--lb-km", point.l_b_km, "Bob-relay fiber, km");
  point_cmd->add_flag("--optimize", point.optimize,
                      "Optimize the DV intensities at this point");
  point_cmd->add_option("--mu-a", point.mu.mu_a, "Alice signal intensity")
      ->capture_default_str();
  point_cmd->add_option("--mu-b", point.mu.mu_b, "Bob signal intensity")
      ->capture_default_str();
  point_cmd->add_flag("--csv", point.csv, "Emit a CSV row instead of text");
  add_model_options(point_cmd, point.m);

  ratelab::cli::SweepOptions sweep;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Rate series over a loss or distance grid");
  sweep_cmd->add_option("--model", sweep.model, "Model: dv, cv, or tgw")
      ->required()
      ->transform(CLI::CheckedTransformer(kModels, CLI::ignore_case));
  sweep_cmd->add_option("--scenario", sweep.scenario, "Relay placement")
      ->transform(CLI::CheckedTransformer(kScenarios, CLI::ignore_case));
  sweep_cmd->add_option("--axis", sweep.axis, "Abscissa: loss-db or distance-km")
      ->transform(CLI::CheckedTransformer(kAxes, CLI::ignore_case));
  sweep_cmd->add_option("--start", sweep.start, "First grid point")
      ->capture_default_str();
  sweep_cmd->add_option("--stop", sweep.stop, "Last grid point")
      ->capture_default_str();
  sweep_cmd->add_option("--points", sweep.points, "Grid size (>= 2)")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out_path,
                        "CSV output path (default: stdout)");
  sweep_cmd->add_option("--svg", sweep.svg_path, "Also write an SVG plot");
  add_model_options(sweep_cmd, sweep.m);

  ratelab::cli::CutoffOptions cutoff;
  CLI::App* cutoff_cmd = app.add_subcommand(
      "cutoff", "Maximum tolerable loss (zero crossing of the signed rate)");
  cutoff_cmd->add_option("--model", cutoff.model, "Model: dv, cv, or tgw")
      ->required()
      ->transform(CLI::CheckedTransformer(kModels, CLI::ignore_case));
  cutoff_cmd->add_option("--scenario", cutoff.scenario, "Relay placement")
      ->transform(CLI::CheckedTransformer(kScenarios, CLI::ignore_case));
  cutoff_cmd->add_option("--lo", cutoff.lo_db, "Bracket start, dB")
      ->capture_default_str();
  cutoff_cmd->add_option("--hi", cutoff.hi_db, "Bracket end, dB")
      ->capture_default_str();
  cutoff_cmd->add_option("--tol", cutoff.tol_db, "Bisection tolerance, dB")
      ->capture_default_str();
  add_model_options(cutoff_cmd, cutoff.m);

  ratelab::cli::ReproduceOptions repro;
  CLI::App* repro_cmd = app.add_subcommand(
      "reproduce", "Figure bundles: rate-vs-loss CSV/SVG sets");
  repro_cmd->add_option("--figure", repro.figures,
                        "Comma list from {1a, 1b, 1c, 1d, 2a, 2b}, ranges "
                        "like 1a..1d, or 'all'")
      ->capture_default_str();
  repro_cmd->add_option("--outdir", repro.outdir, "Output directory")
      ->capture_default_str();
  add_model_options(repro_cmd, repro.m);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*point_cmd) return ratelab::cli::run_point(point, std::cout);
    if (*sweep_cmd) return ratelab::cli::run_sweep_cmd(sweep, std::cout);
    if (*cutoff_cmd) return ratelab::cli::run_cutoff(cutoff, std::cout);
    if (*repro_cmd) return ratelab::cli::run_reproduce(repro, std::cout);
  } catch (const ratelab::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ratelab::ModelDomainError& e) {
    std::cerr << "model-domain error: " << e.what() << '\n';
    return 3;
  } catch (const ratelab::BracketError& e) {
    std::cerr << "bracket error: " << e.what() << '\n';
    return 3;
  } catch (const ratelab::cli::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
