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

#include "polmaj/states.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace polmaj {
namespace {

constexpr double kNormTolerance = 1e-12;

double squared_norm(const std::vector<Complex>& amps) {
  double total = 0.0;
  for (const Complex& c : amps) total += std::norm(c);
  return total;
}

void require_photon_number(int n, int min, const char* what) {
  if (n < min) {
    throw std::invalid_argument(std::string(what) + ": photon number " +
                                std::to_string(n) + " below minimum " +
                                std::to_string(min));
  }
}

std::vector<Complex> zeros(int n) {
  return std::vector<Complex>(static_cast<std::size_t>(n) + 1, Complex{});
}

}  // namespace

PureFockState PureFockState::from_amplitudes(std::vector<Complex> amps) {
  if (amps.empty()) {
    throw std::invalid_argument("PureFockState needs at least one amplitude");
  }
  const double norm = squared_norm(amps);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
    throw std::invalid_argument("PureFockState amplitudes are not normalized");
  }
  return PureFockState(std::move(amps));
}

PureFockState PureFockState::normalized(std::vector<Complex> amps) {
  if (amps.empty()) {
    throw std::invalid_argument("PureFockState needs at least one amplitude");
  }
  const double norm = squared_norm(amps);
  if (!std::isfinite(norm) || norm <= 0.0) {
    throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (Complex& c : amps) c *= scale;
  return PureFockState(std::move(amps));
}

double overlap_modulus(const PureFockState& a, const PureFockState& b) {
  if (a.photon_number() != b.photon_number()) {
    throw std::invalid_argument("overlap between different photon numbers");
  }
  Complex total{};
  for (int m = 0; m <= a.photon_number(); ++m) {
    total += std::conj(a.amplitude(m)) * b.amplitude(m);
  }
  return std::abs(total);
}

MixedState::MixedState(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("MixedState needs at least one component");
  }
  double total = 0.0;
  for (const Component& c : components_) {
    if (!std::isfinite(c.weight) || c.weight < 0.0) {
      throw std::invalid_argument("MixedState weight must be nonnegative");
    }
    total += c.weight;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw std::invalid_argument("MixedState weights do not sum to 1");
  }
}

PureFockState make_coherent(int n) {
  require_photon_number(n, 0, "make_coherent");
  auto amps = zeros(n);
  amps.back() = 1.0;
  return PureFockState::from_amplitudes(std::move(amps));
}

PureFockState make_phase(int n) {
  require_photon_number(n, 0, "make_phase");
  return PureFockState::normalized(
      std::vector<Complex>(static_cast<std::size_t>(n) + 1, Complex{1.0}));
}

PureFockState make_squeezed(int n) {
  require_photon_number(n, 2, "make_squeezed");
  auto amps = zeros(n);
  if (n % 2 == 0) {
    amps[n / 2] = 1.0;
  } else {
    amps[(n - 1) / 2] = M_SQRT1_2;
    amps[(n + 1) / 2] = M_SQRT1_2;
  }
  return PureFockState::normalized(std::move(amps));
}

PureFockState make_noon(int n) {
  require_photon_number(n, 1, "make_noon");
  auto amps = zeros(n);
  amps.front() = M_SQRT1_2;
  amps.back() = M_SQRT1_2;
  return PureFockState::normalized(std::move(amps));
}

PureFockState make_hs_extremal(int n) {
  switch (n) {
    case 2:
    case 3:
      return make_noon(n);
    case 4: {
      // (|0,4> + sqrt(2) |3,1>)/sqrt(3)
      auto amps = zeros(4);
      amps[0] = 1.0 / std::sqrt(3.0);
      amps[3] = std::sqrt(2.0 / 3.0);
      return PureFockState::normalized(std::move(amps));
    }
    case 5: {
      // (|1,4> + |4,1>)/sqrt(2)
      auto amps = zeros(5);
      amps[1] = M_SQRT1_2;
      amps[4] = M_SQRT1_2;
      return PureFockState::normalized(std::move(amps));
    }
    default:
      throw std::invalid_argument(
          "make_hs_extremal: only n in {2, 3, 4, 5} is tabulated, got " +
          std::to_string(n));
  }
}

AnalyticQFamily make_analytic(AnalyticKind kind, double nbar) {
  if (!std::isfinite(nbar) || nbar < 0.0) {
    throw std::invalid_argument("make_analytic: nbar must be finite and >= 0");
  }
  return AnalyticQFamily{kind, nbar};
}

PureFockState random_pure(int n, std::uint64_t seed) {
  require_photon_number(n, 0, "random_pure");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto amps = zeros(n);
  for (Complex& c : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    c = Complex{re, im};
  }
  return PureFockState::normalized(std::move(amps));
}

}  // namespace polmaj
