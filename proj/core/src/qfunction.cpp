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

#include "polmaj/qfunction.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace polmaj {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvFourPi = 1.0 / (4.0 * std::numbers::pi);

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double wrap_phi(double phi) { return phi <= -kPi ? phi + 2.0 * kPi : phi; }

// Sum_m radial[m] e^{i m phi} c_m, in a fixed order shared by all callers.
Complex overlap_sum(std::span<const double> radial,
                    std::span<const Complex> phases,
                    std::span<const Complex> amps) {
  Complex acc{};
  for (std::size_t m = 0; m < amps.size(); ++m) {
    acc += (radial[m] * phases[m]) * amps[m];
  }
  return acc;
}

void fill_phases(double phi, std::span<Complex> out) {
  for (std::size_t m = 0; m < out.size(); ++m) {
    out[m] = std::polar(1.0, static_cast<double>(m) * phi);
  }
}

class MixedQFunction {
 public:
  explicit MixedQFunction(const MixedState& mixed) {
    for (const auto& c : mixed.components()) {
      weights_.push_back(c.weight);
      parts_.emplace_back(c.state);
    }
  }

  double operator()(Direction omega) const {
    double total = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      total += weights_[i] * parts_[i](omega);
    }
    return total;
  }

 private:
  std::vector<double> weights_;
  std::vector<PureQFunction> parts_;
};

}  // namespace

Direction Direction::make(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= kPi) || !(phi > -kPi && phi <= kPi)) {
    throw std::invalid_argument("Direction outside theta in [0,pi], phi in (-pi,pi]");
  }
  return Direction{theta, phi};
}

Direction Direction::from_cartesian(const std::array<double, 3>& v) {
  const double r = std::hypot(v[0], v[1], v[2]);
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("Direction::from_cartesian: zero vector");
  }
  const double theta = std::acos(std::clamp(v[2] / r, -1.0, 1.0));
  return Direction{theta, wrap_phi(std::atan2(v[1], v[0]))};
}

std::array<double, 3> Direction::to_cartesian() const {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

Direction rotate(const EulerRotation& rot, Direction omega) {
  const RotationMatrix m = to_matrix(rot);
  const auto v = omega.to_cartesian();
  std::array<double, 3> w{};
  for (int i = 0; i < 3; ++i) {
    w[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  }
  return Direction::from_cartesian(w);
}

CoherentRadial::CoherentRadial(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("CoherentRadial: negative n");
  half_log_binomial_.resize(static_cast<std::size_t>(n) + 1);
  const double log_n_fact = std::lgamma(n + 1.0);
  for (int m = 0; m <= n; ++m) {
    half_log_binomial_[static_cast<std::size_t>(m)] =
        0.5 * (log_n_fact - std::lgamma(m + 1.0) - std::lgamma(n - m + 1.0));
  }
}

void CoherentRadial::evaluate(double theta, std::span<double> out) const {
  const double s = std::sin(theta / 2.0);
  // cos(pi/2) rounds to 6e-17; the south pole must vanish exactly.
  const double c = theta == kPi ? 0.0 : std::cos(theta / 2.0);
  const bool s_zero = !(s > 0.0);
  const bool c_zero = !(c > 0.0);
  const double log_s = s_zero ? 0.0 : std::log(s);
  const double log_c = c_zero ? 0.0 : std::log(c);
  for (int m = 0; m <= n_; ++m) {
    const int es = n_ - m;
    const int ec = m;
    if ((s_zero && es > 0) || (c_zero && ec > 0)) {
      out[static_cast<std::size_t>(m)] = 0.0;
      continue;
    }
    double log_term = half_log_binomial_[static_cast<std::size_t>(m)];
    if (es > 0) log_term += es * log_s;
    if (ec > 0) log_term += ec * log_c;
    out[static_cast<std::size_t>(m)] = std::exp(log_term);
  }
}

Complex su2_overlap(int n, Direction omega, const PureFockState& state) {
  if (state.photon_number() != n) {
    throw std::invalid_argument("su2_overlap: photon number mismatch");
  }
  const CoherentRadial radial(n);
  std::vector<double> r(static_cast<std::size_t>(n) + 1);
  std::vector<Complex> ph(r.size());
  radial.evaluate(omega.theta, r);
  fill_phases(omega.phi, ph);
  return overlap_sum(r, ph, state.amplitudes());
}

PureQFunction::PureQFunction(PureFockState state)
    : state_(std::move(state)),
      radial_(state_.photon_number()),
      prefactor_((state_.photon_number() + 1) * kInvFourPi) {}

double PureQFunction::operator()(Direction omega) const {
  const std::size_t dim = state_.amplitudes().size();
  // Small photon numbers fit on the stack.
  constexpr std::size_t kInline = 32;
  double r_buf[kInline];
  Complex ph_buf[kInline];
  std::vector<double> r_heap;
  std::vector<Complex> ph_heap;
  std::span<double> r;
  std::span<Complex> ph;
  if (dim <= kInline) {
    r = std::span<double>(r_buf, dim);
    ph = std::span<Complex>(ph_buf, dim);
  } else {
    r_heap.resize(dim);
    ph_heap.resize(dim);
    r = r_heap;
    ph = ph_heap;
  }
  radial_.evaluate(omega.theta, r);
  fill_phases(omega.phi, ph);
  return prefactor_ * std::norm(overlap_sum(r, ph, state_.amplitudes()));
}

double q_pure(const PureFockState& state, Direction omega) {
  return PureQFunction(state)(omega);
}

double q_mixed(const MixedState& mixed, Direction omega) {
  return MixedQFunction(mixed)(omega);
}

double q_analytic(const AnalyticQFamily& family, Direction omega) {
  const double nbar = family.nbar;
  const double s = std::sin(omega.theta / 2.0);
  const double c = std::cos(omega.theta / 2.0);
  switch (family.kind) {
    case AnalyticKind::kGlauberCoherent:
      return kInvFourPi * std::exp(-nbar * s * s) * (1.0 + nbar * c * c);
    case AnalyticKind::kThermal: {
      const double den = 1.0 + nbar * s * s;
      return (1.0 + nbar) * kInvFourPi / (den * den);
    }
    case AnalyticKind::kTwoModeSqueezedVacuum: {
      const double ct = std::cos(omega.theta);
      const double den = 2.0 + nbar * ct * ct;
      return std::sqrt(2.0 + nbar) / (2.0 * kPi) / (den * std::sqrt(den));
    }
  }
  throw std::invalid_argument("q_analytic: unknown family");
}

double q_value(const AnyState& state, Direction omega) {
  return std::visit(
      Overloaded{
          [&](const PureFockState& s) { return q_pure(s, omega); },
          [&](const MixedState& s) { return q_mixed(s, omega); },
          [&](const AnalyticQFamily& s) { return q_analytic(s, omega); },
      },
      state);
}

QFunction make_q_function(const AnyState& state) {
  return std::visit(
      Overloaded{
          [](const PureFockState& s) -> QFunction {
            auto f = std::make_shared<const PureQFunction>(s);
            return [f](Direction omega) { return (*f)(omega); };
          },
          [](const MixedState& s) -> QFunction {
            auto f = std::make_shared<const MixedQFunction>(s);
            return [f](Direction omega) { return (*f)(omega); };
          },
          [](const AnalyticQFamily& s) -> QFunction {
            return [s](Direction omega) { return q_analytic(s, omega); };
          },
      },
      state);
}

}  // namespace polmaj
