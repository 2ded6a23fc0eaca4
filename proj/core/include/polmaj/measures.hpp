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

#ifndef POLMAJ_MEASURES_HPP_
#define POLMAJ_MEASURES_HPP_

#include <cstddef>

#include "polmaj/majorize.hpp"
#include "polmaj/sphere_grid.hpp"

namespace polmaj {

/// Renyi index q > 0.
class EntropyIndex {
 public:
  /// Throws std::invalid_argument unless q is finite and positive.
  explicit EntropyIndex(double q);
  double q() const { return q_; }

 private:
  double q_;
};

/// Smallest K whose K largest probabilities hold at least a fraction alpha
/// of the mass. alpha must lie in (0, 1].
std::size_t confidence_interval(const DiscreteDistribution& p, double alpha);
/// Same, on a precomputed curve (binary search). Resolution is that of the
/// rounded partial sums, so at alpha = 1 trailing masses below ~1e-16 of the
/// total may be missed; the distribution overload counts them exactly.
std::size_t confidence_interval(const LorenzCurve& curve, double alpha);

/// Renyi entropy in nats; q = 1 is the Shannon entropy. Zero
/// probabilities contribute nothing.
double renyi(const DiscreteDistribution& p, EntropyIndex q);

}  // namespace polmaj

#endif  // POLMAJ_MEASURES_HPP_
