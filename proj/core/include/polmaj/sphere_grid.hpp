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

#ifndef POLMAJ_SPHERE_GRID_HPP_
#define POLMAJ_SPHERE_GRID_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polmaj/qfunction.hpp"

namespace polmaj {

/// Equal-area pixelization: n_theta bands of equal width in cos(theta) times
/// n_phi equal azimuth sectors.
struct GridSpec {
  int n_theta = 400;
  int n_phi = 400;

  /// Throws std::invalid_argument unless both counts are positive and the
  /// pixel count is at least 2.
  static GridSpec make(int n_theta, int n_phi);

  std::size_t pixel_count() const {
    return static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(n_phi);
  }
  /// 4 pi / N for every pixel.
  double pixel_solid_angle() const;
  /// cos(theta_l) for band l = 1..n_theta.
  double band_cos(int l) const;
  /// phi_k for sector k = 1..n_phi.
  double sector_phi(int k) const;
  /// Zero-based flattened index of (l, k): n_phi (l - 1) + k - 1.
  std::size_t index(int l, int k) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Thrown when Q is negative or non-finite at a pixel, or the total mass is
/// not a positive finite number.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A probability vector p (unit sum) plus the pre-normalization mass.
class DiscreteDistribution {
 public:
  /// Divides nonnegative finite weights by their sum, which is kept as
  /// raw_mass. Throws EvaluationError on invalid weights or zero total.
  static DiscreteDistribution normalized(std::vector<double> weights,
                                         std::optional<GridSpec> grid = {});

  /// Wraps an already normalized vector (sum within 1e-12 of 1) unchanged.
  static DiscreteDistribution from_probabilities(std::vector<double> p,
                                                 double raw_mass = 1.0,
                                                 std::optional<GridSpec> grid = {});

  std::span<const double> p() const { return p_; }
  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t j) const { return p_[j]; }
  double raw_mass() const { return raw_mass_; }
  const std::optional<GridSpec>& grid() const { return grid_; }

 private:
  DiscreteDistribution(std::vector<double> p, double raw_mass,
                       std::optional<GridSpec> grid)
      : p_(std::move(p)), raw_mass_(raw_mass), grid_(grid) {}

  std::vector<double> p_;
  double raw_mass_ = 1.0;
  std::optional<GridSpec> grid_;
};

/// Pixel centres ordered by flattened index j.
std::vector<Direction> grid_directions(const GridSpec& spec);

struct DiscretizeOptions {
  /// Worker threads for pixel evaluation; 0 picks hardware concurrency.
  /// Output is bit-identical for every thread count.
  unsigned threads = 0;
};

/// p_j = Q(Omega_j) 4 pi / N, renormalized to unit sum.
DiscreteDistribution discretize(const QFunction& q, const GridSpec& spec,
                                const DiscretizeOptions& options = {});

/// Same result as the generic overload, evaluated band by band. Pure and
/// mixed Fock states reuse radial factors across each band.
DiscreteDistribution discretize(const AnyState& state, const GridSpec& spec,
                                const DiscretizeOptions& options = {});

/// Neumaier-compensated sum in index order.
double compensated_sum(std::span<const double> values);

}  // namespace polmaj

#endif  // POLMAJ_SPHERE_GRID_HPP_
