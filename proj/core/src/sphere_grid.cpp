// Copyright 2026 The polmaj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polmaj/sphere_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

namespace polmaj {
namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Calls fill_band(l, row) for every band l = 1..n_theta, where row is the
// n_phi slice of `out` belonging to that band. Bands are split across
// threads; each pixel is written exactly once.
template <class FillBand>
void for_each_band(const GridSpec& spec, unsigned threads, std::vector<double>& out,
                   FillBand&& fill_band) {
  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(spec.n_theta));
  auto run = [&](int l_begin, int l_end) {
    for (int l = l_begin; l < l_end; ++l) {
      std::span<double> row(out.data() + spec.index(l, 1),
                            static_cast<std::size_t>(spec.n_phi));
      fill_band(l, row);
    }
  };
  if (workers == 1) {
    run(1, spec.n_theta + 1);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const int per = (spec.n_theta + static_cast<int>(workers) - 1) / static_cast<int>(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const int begin = 1 + static_cast<int>(w) * per;
    const int end = std::min(spec.n_theta + 1, begin + per);
    if (begin >= end) break;
    pool.emplace_back(run, begin, end);
  }
}

DiscreteDistribution finish(std::vector<double> weights, const GridSpec& spec) {
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const double w = weights[j];
    if (!std::isfinite(w) || w < 0.0) {
      throw EvaluationError("Q is negative or non-finite at pixel j=" +
                            std::to_string(j + 1) + " (value " + std::to_string(w) + ")");
    }
  }
  return DiscreteDistribution::normalized(std::move(weights), spec);
}

// Per-sector phase tables e^{i m phi_k}, laid out [k-1][m].
std::vector<Complex> sector_phases(const GridSpec& spec, int n) {
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  std::vector<Complex> table(static_cast<std::size_t>(spec.n_phi) * dim);
  for (int k = 1; k <= spec.n_phi; ++k) {
    const double phi = spec.sector_phi(k);
    for (std::size_t m = 0; m < dim; ++m) {
      table[static_cast<std::size_t>(k - 1) * dim + m] =
          std::polar(1.0, static_cast<double>(m) * phi);
    }
  }
  return table;
}

// Band-factorized evaluation of a weighted sum of pure-state Q functions.
// Matches the pointwise PureQFunction arithmetic operation for operation.
struct PureComponentTables {
  double weight;
  const PureQFunction* q;
  std::vector<Complex> phases;
};

std::vector<double> evaluate_pure_mixture(const std::vector<double>& weights,
                                          const std::vector<PureQFunction>& parts,
                                          bool weighted, const GridSpec& spec,
                                          unsigned threads) {
  std::vector<PureComponentTables> tables;
  tables.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    tables.push_back({weights[i], &parts[i],
                      sector_phases(spec, parts[i].state().photon_number())});
  }
  const double d_omega = spec.pixel_solid_angle();
  std::vector<double> out(spec.pixel_count());
  for_each_band(spec, threads, out, [&](int l, std::span<double> row) {
    const double theta = std::acos(spec.band_cos(l));
    std::vector<std::vector<double>> radial(tables.size());
    for (std::size_t i = 0; i < tables.size(); ++i) {
      radial[i].resize(tables[i].q->state().amplitudes().size());
      tables[i].q->radial().evaluate(theta, radial[i]);
    }
    for (int k = 1; k <= spec.n_phi; ++k) {
      double total = 0.0;
      for (std::size_t i = 0; i < tables.size(); ++i) {
        const auto amps = tables[i].q->state().amplitudes();
        const std::size_t dim = amps.size();
        std::span<const Complex> ph(tables[i].phases.data() +
                                        static_cast<std::size_t>(k - 1) * dim,
                                    dim);
        Complex acc{};
        for (std::size_t m = 0; m < dim; ++m) {
          acc += (radial[i][m] * ph[m]) * amps[m];
        }
        const double q = tables[i].q->prefactor() * std::norm(acc);
        total = weighted ? total + tables[i].weight * q : q;
      }
      row[static_cast<std::size_t>(k - 1)] = total * d_omega;
    }
  });
  return out;
}

}  // namespace

GridSpec GridSpec::make(int n_theta, int n_phi) {
  if (n_theta <= 0 || n_phi <= 0) {
    throw std::invalid_argument("GridSpec: n_theta and n_phi must be positive");
  }
  GridSpec g{n_theta, n_phi};
  if (g.pixel_count() < 2) {
    throw std::invalid_argument("GridSpec: need at least 2 pixels");
  }
  return g;
}

double GridSpec::pixel_solid_angle() const {
  return 4.0 * kPi / static_cast<double>(pixel_count());
}

double GridSpec::band_cos(int l) const {
  return (2.0 * l - 1.0) / n_theta - 1.0;
}

double GridSpec::sector_phi(int k) const { return 2.0 * kPi / n_phi * k - kPi; }

std::size_t GridSpec::index(int l, int k) const {
  return static_cast<std::size_t>(n_phi) * static_cast<std::size_t>(l - 1) +
         static_cast<std::size_t>(k - 1);
}

double compensated_sum(std::span<const double> values) {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

DiscreteDistribution DiscreteDistribution::normalized(std::vector<double> weights,
                                                      std::optional<GridSpec> grid) {
  if (weights.empty()) throw EvaluationError("empty distribution");
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw EvaluationError("distribution weights must be finite and nonnegative");
    }
  }
  const double mass = compensated_sum(weights);
  if (!std::isfinite(mass) || !(mass > 0.0)) {
    throw EvaluationError("distribution total mass is not a positive finite number");
  }
  for (double& w : weights) w /= mass;
  return DiscreteDistribution(std::move(weights), mass, grid);
}

DiscreteDistribution DiscreteDistribution::from_probabilities(
    std::vector<double> p, double raw_mass, std::optional<GridSpec> grid) {
  if (p.empty()) throw EvaluationError("empty distribution");
  for (double w : p) {
    if (!std::isfinite(w) || w < 0.0) {
      throw EvaluationError("probabilities must be finite and nonnegative");
    }
  }
  if (std::abs(compensated_sum(p) - 1.0) > 1e-12) {
    throw EvaluationError("probabilities do not sum to 1");
  }
  return DiscreteDistribution(std::move(p), raw_mass, grid);
}

std::vector<Direction> grid_directions(const GridSpec& spec) {
  std::vector<Direction> dirs;
  dirs.reserve(spec.pixel_count());
  for (int l = 1; l <= spec.n_theta; ++l) {
    const double theta = std::acos(spec.band_cos(l));
    for (int k = 1; k <= spec.n_phi; ++k) {
      dirs.push_back(Direction{theta, spec.sector_phi(k)});
    }
  }
  return dirs;
}

DiscreteDistribution discretize(const QFunction& q, const GridSpec& spec,
                                const DiscretizeOptions& options) {
  const double d_omega = spec.pixel_solid_angle();
  std::vector<double> out(spec.pixel_count());
  for_each_band(spec, options.threads, out, [&](int l, std::span<double> row) {
    const double theta = std::acos(spec.band_cos(l));
    for (int k = 1; k <= spec.n_phi; ++k) {
      row[static_cast<std::size_t>(k - 1)] =
          q(Direction{theta, spec.sector_phi(k)}) * d_omega;
    }
  });
  return finish(std::move(out), spec);
}

DiscreteDistribution discretize(const AnyState& state, const GridSpec& spec,
                                const DiscretizeOptions& options) {
  return std::visit(
      Overloaded{
          [&](const PureFockState& s) {
            std::vector<PureQFunction> parts{PureQFunction(s)};
            return finish(evaluate_pure_mixture({1.0}, parts, false, spec,
                                                options.threads),
                          spec);
          },
          [&](const MixedState& s) {
            std::vector<double> weights;
            std::vector<PureQFunction> parts;
            for (const auto& c : s.components()) {
              weights.push_back(c.weight);
              parts.emplace_back(c.state);
            }
            return finish(evaluate_pure_mixture(weights, parts, true, spec,
                                                options.threads),
                          spec);
          },
          [&](const AnalyticQFamily& s) {
            const double d_omega = spec.pixel_solid_angle();
            std::vector<double> out(spec.pixel_count());
            for_each_band(spec, options.threads, out, [&](int l, std::span<double> row) {
              // No phi dependence: one evaluation per band.
              const double theta = std::acos(spec.band_cos(l));
              const double p = q_analytic(s, Direction{theta, 0.0}) * d_omega;
              std::fill(row.begin(), row.end(), p);
            });
            return finish(std::move(out), spec);
          },
      },
      state);
}

}  // namespace polmaj
