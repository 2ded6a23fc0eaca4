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

#include "polmaj/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polmaj {

EntropyIndex::EntropyIndex(double q) : q_(q) {
  if (!std::isfinite(q) || !(q > 0.0)) {
    throw std::invalid_argument("Renyi index q must be finite and positive");
  }
}

std::size_t confidence_interval(const LorenzCurve& curve, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("confidence level alpha must lie in (0, 1]");
  }
  if (curve.size() == 0) throw std::invalid_argument("empty Lorenz curve");
  // Threshold relative to the computed total so that alpha = 1 lands on the
  // support size regardless of rounding in the partial sums.
  const double target = alpha * curve[curve.size() - 1];
  const auto s = curve.s();
  const auto it = std::lower_bound(s.begin(), s.end(), target);
  return static_cast<std::size_t>(it - s.begin()) + 1;
}

std::size_t confidence_interval(const DiscreteDistribution& p, double alpha) {
  // Full confidence needs the whole support, including masses too small to
  // move the rounded partial sums.
  if (alpha == 1.0) {
    const auto v = p.p();
    const auto support = static_cast<std::size_t>(
        std::count_if(v.begin(), v.end(), [](double x) { return x > 0.0; }));
    if (support > 0) return support;
  }
  return confidence_interval(lorenz(p), alpha);
}

double renyi(const DiscreteDistribution& p, EntropyIndex index) {
  const double q = index.q();
  if (q == 1.0) {
    double h = 0.0;
    for (double v : p.p()) {
      if (v > 0.0) h -= v * std::log(v);
    }
    return h;
  }
  double total = 0.0;
  for (double v : p.p()) {
    if (v > 0.0) total += std::pow(v, q);
  }
  return std::log(total) / (1.0 - q);
}

}  // namespace polmaj
