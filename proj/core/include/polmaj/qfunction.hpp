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

#ifndef POLMAJ_QFUNCTION_HPP_
#define POLMAJ_QFUNCTION_HPP_

#include <array>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "polmaj/rotation.hpp"
#include "polmaj/states.hpp"

namespace polmaj {

/// A point on the Poincare sphere: theta in [0, pi], phi in (-pi, pi].
struct Direction {
  double theta = 0.0;
  double phi = 0.0;

  /// Validating constructor; throws std::invalid_argument outside range.
  static Direction make(double theta, double phi);
  /// Maps a nonzero Cartesian vector onto the canonical angle ranges.
  static Direction from_cartesian(const std::array<double, 3>& v);
  std::array<double, 3> to_cartesian() const;
};

/// Image of `omega` under the geometric rotation that `rot` represents.
Direction rotate(const EulerRotation& rot, Direction omega);

/// <n, Omega | psi>, i.e. the conjugated coherent-state coefficients
/// sqrt(C(n,m)) sin^{n-m}(theta/2) cos^m(theta/2) e^{+i m phi} against c_m.
/// Throws std::invalid_argument if state.photon_number() != n.
Complex su2_overlap(int n, Direction omega, const PureFockState& state);

/// Q(Omega) = (n+1)/(4 pi) |<n,Omega|psi>|^2.
double q_pure(const PureFockState& state, Direction omega);

/// Weighted sum of the component Q functions; each component is projected on
/// the coherent states of its own photon number.
double q_mixed(const MixedState& mixed, Direction omega);

/// Closed-form Q for Glauber coherent, thermal and two-mode squeezed vacuum
/// states of mean total photon number nbar.
double q_analytic(const AnalyticQFamily& family, Direction omega);

/// Radial factors sqrt(C(n,m)) sin^{n-m}(theta/2) cos^m(theta/2), m = 0..n.
/// Shared by the pointwise evaluators and the band-factorized grid path so
/// both produce identical bits.
class CoherentRadial {
 public:
  explicit CoherentRadial(int n);

  int photon_number() const { return n_; }
  /// Writes n+1 factors for polar angle theta into `out`.
  void evaluate(double theta, std::span<double> out) const;

 private:
  int n_;
  std::vector<double> half_log_binomial_;
};

/// Q function of a pure state with its binomial table precomputed.
class PureQFunction {
 public:
  explicit PureQFunction(PureFockState state);

  double operator()(Direction omega) const;

  const PureFockState& state() const { return state_; }
  const CoherentRadial& radial() const { return radial_; }
  /// (n+1)/(4 pi)
  double prefactor() const { return prefactor_; }

 private:
  PureFockState state_;
  CoherentRadial radial_;
  double prefactor_;
};

using AnyState = std::variant<PureFockState, MixedState, AnalyticQFamily>;

/// Q of any supported state description.
double q_value(const AnyState& state, Direction omega);

using QFunction = std::function<double(Direction)>;

/// A thread-safe callable evaluating Q for `state`.
QFunction make_q_function(const AnyState& state);

}  // namespace polmaj

#endif  // POLMAJ_QFUNCTION_HPP_
