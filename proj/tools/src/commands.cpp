#include "commands.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "csv.hpp"
#include "svg.hpp"

namespace ratelab::cli {

namespace {

namespace fs = std::filesystem;

std::ofstream open_for_write(const fs::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  return os;
}

void finish_write(std::ofstream& os, const fs::path& path) {
  os.flush();
  if (!os.good()) {
    throw IoError("failed while writing '" + path.string() + "'");
  }
}

void print_field(std::ostream& out, const char* name, const std::string& v) {
  out << std::left << std::setw(14) << name << v << '\n';
}

void print_field(std::ostream& out, const char* name, double v) {
  print_field(out, name, format_sig12(v));
}

ChannelPair resolve_channel(const PointOptions& opt, double* total_db) {
  const int given = (opt.loss_db ? 1 : 0) + (opt.distance_km ? 1 : 0) +
                    ((opt.l_a_km || opt.l_b_km) ? 1 : 0);
  if (given != 1) {
    throw DomainError(
        "specify exactly one of --loss-db, --distance-km, or "
        "--la-km together with --lb-km");
  }
  if (opt.loss_db) {
    *total_db = *opt.loss_db;
    return channel_from_total_loss(*opt.loss_db, opt.scenario);
  }
  if (opt.distance_km) {
    *total_db = *opt.distance_km * opt.m.fiber.alpha_db_per_km;
    return channel_from_total_loss(*total_db, opt.scenario);
  }
  if (!opt.l_a_km || !opt.l_b_km) {
    throw DomainError("--la-km and --lb-km must be given together");
  }
  *total_db = (*opt.l_a_km + *opt.l_b_km) * opt.m.fiber.alpha_db_per_km;
  return channel_from_distances(*opt.l_a_km, *opt.l_b_km, opt.m.fiber);
}

RateSeries sweep_series(SweepModel model, Scenario scenario, double start,
                        double stop, int points, const CommonModelOptions& m,
                        SweepAxis axis = SweepAxis::TotalLossDb) {
  SweepSpec spec;
  spec.model = model;
  spec.scenario = scenario;
  spec.axis = axis;
  spec.start = start;
  spec.stop = stop;
  spec.points = points;
  spec.fiber = m.fiber;
  spec.dv = m.dv;
  spec.cv = m.cv;
  spec.optimizer = m.optimizer;
  return run_sweep(spec);
}

}  // namespace

const char* model_name(SweepModel model) noexcept {
  switch (model) {
    case SweepModel::Dv: return "dv";
    case SweepModel::Cv: return "cv";
    case SweepModel::Tgw: return "tgw";
  }
  return "?";
}

const char* scenario_name(Scenario scenario) noexcept {
  return scenario == Scenario::Symmetric ? "symmetric" : "asymmetric";
}

std::vector<std::string> expand_figures(const std::string& selection) {
  static const std::array<std::string, 6> known = {"1a", "1b", "1c",
                                                   "1d", "2a", "2b"};
  auto index_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < known.size(); ++i) {
      if (known[i] == name) return static_cast<int>(i);
    }
    throw DomainError("unknown figure '" + name +
                      "' (choose from 1a, 1b, 1c, 1d, 2a, 2b, all)");
  };

  std::vector<std::string> out;
  std::stringstream ss(selection);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    if (token == "all") {
      out.assign(known.begin(), known.end());
      continue;
    }
    const auto dots = token.find("..");
    if (dots != std::string::npos) {
      const int lo = index_of(token.substr(0, dots));
      const int hi = index_of(token.substr(dots + 2));
      if (hi < lo) throw DomainError("empty figure range '" + token + "'");
      for (int i = lo; i <= hi; ++i) out.push_back(known[i]);
    } else {
      out.push_back(known[index_of(token)]);
    }
  }
  if (out.empty()) throw DomainError("no figures selected");
  return out;
}

int run_point(const PointOptions& opt, std::ostream& out) {
  double total_db = 0.0;
  const ChannelPair channel = resolve_channel(opt, &total_db);

  RateRow row{total_db,      total_db,     channel.eta_a(), channel.eta_b(),
              0.0,           0.0,          std::nullopt,    RowStatus::Ok};
  std::ostringstream body;
  switch (opt.model) {
    case SweepModel::Dv: {
      Intensities mu = opt.mu;
      if (opt.optimize) {
        const Optimum best =
            optimize_intensities(channel, opt.m.dv, opt.m.optimizer);
        mu = best.mu;
        if (!best.positive_rate) {
          body << "note          no positive rate anywhere in the search box\n";
        }
      }
      const DvRateBreakdown r = dv_key_rate(channel, opt.m.dv, mu);
      row.rate_signed = r.rate;
      row.mu = mu;
      print_field(body, "mu_a", mu.mu_a);
      print_field(body, "mu_b", mu.mu_b);
      print_field(body, "p11", r.p11);
      print_field(body, "y11", r.y11);
      print_field(body, "e11x", r.e11x);
      print_field(body, "gain_z", r.gain_z);
      print_field(body, "qber_z", r.qber_z);
      print_field(body, "rate", r.rate);
      print_field(body, "secure_rate", r.secure_rate());
      break;
    }
    case SweepModel::Cv: {
      const CvRateBreakdown r = cv_key_rate(channel, opt.m.cv);
      row.rate_signed = r.rate;
      print_field(body, "branch",
                  std::string(r.branch == CvBranch::Symmetric ? "symmetric"
                                                              : "asymmetric"));
      print_field(body, "chi", r.chi);
      print_field(body, "i_ab", r.i_ab);
      print_field(body, "i_e", r.i_e);
      print_field(body, "rate", r.rate);
      print_field(body, "secure_rate", r.secure_rate());
      break;
    }
    case SweepModel::Tgw: {
      const double r = tgw_bound(channel);
      row.rate_signed = r;
      print_field(body, "rate", r);
      break;
    }
  }
  row.rate_clamped = row.rate_signed > 0.0 ? row.rate_signed : 0.0;

  if (opt.csv) {
    RateSeries one;
    one.rows.push_back(row);
    write_rate_series_csv(out, one);
    return 0;
  }
  print_field(out, "model", std::string(model_name(opt.model)));
  print_field(out, "scenario", std::string(scenario_name(opt.scenario)));
  print_field(out, "total_loss_db", total_db);
  print_field(out, "eta_a", channel.eta_a());
  print_field(out, "eta_b", channel.eta_b());
  out << body.str();
  return 0;
}

int run_sweep_cmd(const SweepOptions& opt, std::ostream& out) {
  const RateSeries series = sweep_series(opt.model, opt.scenario, opt.start,
                                         opt.stop, opt.points, opt.m, opt.axis);
  if (opt.out_path) {
    std::ofstream os = open_for_write(*opt.out_path);
    write_rate_series_csv(os, series);
    finish_write(os, *opt.out_path);
    out << "wrote " << *opt.out_path << '\n';
  } else {
    write_rate_series_csv(out, series);
  }
  if (opt.svg_path) {
    std::ofstream os = open_for_write(*opt.svg_path);
    const std::string label = std::string(model_name(opt.model)) + " " +
                              scenario_name(opt.scenario);
    write_rate_svg(os, label,
                   opt.axis == SweepAxis::DistanceKm ? "distance (km)"
                                                     : "total loss (dB)",
                   {{label, &series}});
    finish_write(os, *opt.svg_path);
    out << "wrote " << *opt.svg_path << '\n';
  }
  return 0;
}

int run_cutoff(const CutoffOptions& opt, std::ostream& out) {
  try {
    const double db =
        find_cutoff(opt.model, opt.scenario, opt.m.dv, opt.m.cv,
                    opt.m.optimizer, opt.lo_db, opt.hi_db, opt.tol_db);
    const double km = db / opt.m.fiber.alpha_db_per_km;
    out << "cutoff: " << format_sig12(db) << " dB (" << format_sig12(km)
        << " km @ " << format_sig12(opt.m.fiber.alpha_db_per_km)
        << " dB/km)\n";
  } catch (const BracketError& e) {
    if (e.kind() == BracketError::Kind::NoSignChangeByEnd) {
      out << "cutoff beyond bracket: rate is still positive at "
          << format_sig12(opt.hi_db) << " dB\n";
    } else {
      out << "no cutoff bracket: rate is not positive at "
          << format_sig12(opt.lo_db) << " dB\n";
    }
  }
  return 0;
}

int run_reproduce(const ReproduceOptions& opt, std::ostream& out) {
  const std::vector<std::string> figures = expand_figures(opt.figures);
  const fs::path outdir(opt.outdir);

  auto emit_csv = [&](const fs::path& name, const RateSeries& series) {
    const fs::path path = outdir / name;
    std::ofstream os = open_for_write(path);
    write_rate_series_csv(os, series);
    finish_write(os, path);
    out << "wrote " << path.string() << '\n';
  };
  auto emit_svg = [&](const fs::path& name, const std::string& title,
                      const std::vector<SvgSeries>& series) {
    const fs::path path = outdir / name;
    std::ofstream os = open_for_write(path);
    write_rate_svg(os, title, "total loss (dB)", series);
    finish_write(os, path);
    out << "wrote " << path.string() << '\n';
  };

  for (const std::string& fig : figures) {
    if (fig[0] == '1') {
      const Scenario scenario = (fig == "1a" || fig == "1b")
                                    ? Scenario::AsymmetricRelayAtAlice
                                    : Scenario::Symmetric;
      // b/d panels are the low-loss zooms of a/c.
      const bool zoom = fig == "1b" || fig == "1d";
      const double stop = zoom ? 1.5 : 6.0;
      const RateSeries dv = sweep_series(SweepModel::Dv, scenario, 0.0, stop,
                                         61, opt.m);
      const RateSeries cv = sweep_series(SweepModel::Cv, scenario, 0.0, stop,
                                         61, opt.m);
      emit_csv("fig" + fig + "_dv.csv", dv);
      emit_csv("fig" + fig + "_cv.csv", cv);
      emit_svg("fig" + fig + ".svg",
               std::string("fig ") + fig + ": DV vs CV, " +
                   scenario_name(scenario),
               {{"dv", &dv}, {"cv", &cv}});
    } else {
      const Scenario scenario = fig == "2a" ? Scenario::AsymmetricRelayAtAlice
                                            : Scenario::Symmetric;
      const double stop = fig == "2a" ? 6.0 : 3.0;
      static constexpr std::array<double, 5> kEtaSet = {0.98, 0.95, 0.90,
                                                        0.88, 0.86};
      std::vector<RateSeries> series;
      series.reserve(kEtaSet.size());
      for (const double eta_d : kEtaSet) {
        CommonModelOptions m = opt.m;
        m.cv.eta_d = eta_d;
        series.push_back(
            sweep_series(SweepModel::Cv, scenario, 0.0, stop, 61, m));
      }
      std::vector<SvgSeries> plot;
      for (std::size_t i = 0; i < kEtaSet.size(); ++i) {
        const int pct = static_cast<int>(kEtaSet[i] * 100.0 + 0.5);
        emit_csv("fig" + fig + "_eta" + std::to_string(pct) + ".csv",
                 series[i]);
        plot.push_back(
            {"eta_d=" + format_sig12(kEtaSet[i]), &series[i]});
      }
      emit_svg("fig" + fig + ".svg",
               std::string("fig ") + fig + ": CV relay efficiency sweep, " +
                   scenario_name(scenario),
               plot);
    }
  }
  return 0;
}

}  // namespace ratelab::cli
