#include "ratelab/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "ratelab/parallel.hpp"

namespace ratelab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Strictly-better predicate implementing the deterministic tie rules:
// higher rate wins; exact rate ties go to the smaller mu_a, then mu_b.
bool better(double rate, const Intensities& mu, double best_rate,
            const Intensities& best_mu) {
  if (rate != best_rate) return rate > best_rate;
  if (mu.mu_a != best_mu.mu_a) return mu.mu_a < best_mu.mu_a;
  return mu.mu_b < best_mu.mu_b;
}

struct Vertex {
  std::array<double, 2> x;  // log10 intensities
  double f;                 // -rate
};

}  // namespace

void OptimizerConfig::validate() const {
  if (!(mu_min > 0.0) || !(mu_max > mu_min) || !std::isfinite(mu_max)) {
    throw DomainError("optimizer box requires 0 < mu_min < mu_max, got [" +
                      std::to_string(mu_min) + ", " + std::to_string(mu_max) +
                      "]");
  }
  if (grid_points < 2) {
    throw DomainError("grid_points must be >= 2, got " +
                      std::to_string(grid_points));
  }
  if (refine_iterations < 0 || random_restarts < 0) {
    throw DomainError("iteration counts must be >= 0");
  }
  if (!(refine_tolerance >= 0.0)) {
    throw DomainError("refine_tolerance must be >= 0");
  }
}

Optimum optimize_intensities(const ChannelPair& channel,
                             const DvDeviceParams& dev,
                             const OptimizerConfig& cfg) {
  cfg.validate();
  dev.validate();

  long evaluations = 0;
  auto rate_at = [&](double mu_a, double mu_b) -> double {
    ++evaluations;
    try {
      return dv_key_rate(channel, dev, Intensities{mu_a, mu_b}).rate;
    } catch (const ModelDomainError&) {
      return kNegInf;
    }
  };

  // Coarse log-spaced grid. Points are evaluated in parallel into a flat
  // buffer; the reduction below is serial and index-ordered, so the result
  // does not depend on scheduling.
  const int n = cfg.grid_points;
  std::vector<double> mus(n);
  const double ratio = cfg.mu_max / cfg.mu_min;
  for (int i = 0; i < n; ++i) {
    mus[i] = i == n - 1
                 ? cfg.mu_max
                 : cfg.mu_min * std::pow(ratio, static_cast<double>(i) /
                                                    (n - 1));
  }
  std::vector<double> grid(static_cast<std::size_t>(n) * n);
  detail::parallel_for(grid.size(), [&](std::size_t k) {
    const Intensities mu{mus[k / n], mus[k % n]};
    try {
      grid[k] = dv_key_rate(channel, dev, mu).rate;
    } catch (const ModelDomainError&) {
      grid[k] = kNegInf;
    }
  });
  evaluations += static_cast<long>(grid.size());

  Intensities best_mu{mus[0], mus[0]};
  double best_rate = grid[0];
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const Intensities mu{mus[k / n], mus[k % n]};
    if (better(grid[k], mu, best_rate, best_mu)) {
      best_rate = grid[k];
      best_mu = mu;
    }
  }

  // Simplex descent on -rate in log10 space, clamped to the box by an
  // infinite objective outside it.
  const double lo = std::log10(cfg.mu_min);
  const double hi = std::log10(cfg.mu_max);
  auto objective = [&](const std::array<double, 2>& x) -> double {
    if (x[0] < lo || x[0] > hi || x[1] < lo || x[1] > hi) {
      return std::numeric_limits<double>::infinity();
    }
    const double r = rate_at(std::pow(10.0, x[0]), std::pow(10.0, x[1]));
    return -r;
  };

  auto simplex_descent = [&](std::array<double, 2> start, double step) {
    // Perturb inward when the start sits on the box edge.
    auto bump = [&](double t) { return t + step <= hi ? t + step : t - step; };
    std::array<Vertex, 3> v{Vertex{start, objective(start)},
                            Vertex{{bump(start[0]), start[1]}, 0.0},
                            Vertex{{start[0], bump(start[1])}, 0.0}};
    v[1].f = objective(v[1].x);
    v[2].f = objective(v[2].x);
    auto order = [&] {
      std::sort(v.begin(), v.end(), [](const Vertex& a, const Vertex& b) {
        if (a.f != b.f) return a.f < b.f;
        return a.x < b.x;
      });
    };
    order();
    for (int it = 0; it < cfg.refine_iterations; ++it) {
      if (std::isfinite(v[2].f) &&
          v[2].f - v[0].f <= cfg.refine_tolerance) {
        break;
      }
      const std::array<double, 2> mid{0.5 * (v[0].x[0] + v[1].x[0]),
                                      0.5 * (v[0].x[1] + v[1].x[1])};
      auto at = [&](double t) {
        return std::array<double, 2>{mid[0] + t * (mid[0] - v[2].x[0]),
                                     mid[1] + t * (mid[1] - v[2].x[1])};
      };
      const auto xr = at(1.0);
      const double fr = objective(xr);
      if (fr < v[0].f) {
        const auto xe = at(2.0);
        const double fe = objective(xe);
        v[2] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
      } else if (fr < v[1].f) {
        v[2] = Vertex{xr, fr};
      } else {
        const auto xc = at(-0.5);
        const double fc = objective(xc);
        if (fc < v[2].f) {
          v[2] = Vertex{xc, fc};
        } else {
          for (int i = 1; i < 3; ++i) {  // shrink toward the best vertex
            v[i].x = {0.5 * (v[i].x[0] + v[0].x[0]),
                      0.5 * (v[i].x[1] + v[0].x[1])};
            v[i].f = objective(v[i].x);
          }
        }
      }
      order();
    }
    return v[0];
  };

  const double grid_step =
      n > 1 ? (hi - lo) / (n - 1) : 0.1;  // one coarse cell
  std::vector<Vertex> candidates;
  candidates.push_back(simplex_descent(
      {std::log10(best_mu.mu_a), std::log10(best_mu.mu_b)}, 0.5 * grid_step));

  if (cfg.random_restarts > 0) {
    std::mt19937 rng(cfg.seed);
    std::uniform_real_distribution<double> pick(lo, hi);
    for (int r = 0; r < cfg.random_restarts; ++r) {
      const double a = pick(rng);
      const double b = pick(rng);
      candidates.push_back(simplex_descent({a, b}, 0.1 * (hi - lo)));
    }
  }

  Optimum out{best_mu, best_rate, 0, false};
  for (const Vertex& c : candidates) {
    if (!std::isfinite(c.f)) continue;
    const Intensities mu{std::pow(10.0, c.x[0]), std::pow(10.0, c.x[1])};
    if (better(-c.f, mu, out.rate, out.mu)) {
      out.rate = -c.f;
      out.mu = mu;
    }
  }
  out.evaluations = evaluations;
  out.positive_rate = out.rate > 0.0;
  return out;
}

}  // namespace ratelab
