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

#ifndef POLMAJ_ROTATION_HPP_
#define POLMAJ_ROTATION_HPP_

#include <array>
#include <vector>

#include "polmaj/states.hpp"

namespace polmaj {

/// Rotation R = Rz(alpha) Ry(beta) Rz(gamma) in the z-y-z convention.
/// beta lies in [0, pi]; alpha and gamma lie in (-pi, pi].
class EulerRotation {
 public:
  EulerRotation() = default;
  /// Throws std::invalid_argument outside the canonical ranges.
  EulerRotation(double alpha, double beta, double gamma);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }

  static EulerRotation identity() { return {}; }

 private:
  double alpha_ = 0.0;
  double beta_ = 0.0;
  double gamma_ = 0.0;
};

using RotationMatrix = std::array<std::array<double, 3>, 3>;

RotationMatrix to_matrix(const EulerRotation& rot);
/// Inverse of `to_matrix` for proper orthogonal matrices, with angles
/// reduced to the canonical ranges (gamma = 0 when beta is 0 or pi).
EulerRotation from_matrix(const RotationMatrix& m);
/// The rotation `outer * inner` (inner applied first).
EulerRotation compose(const EulerRotation& outer, const EulerRotation& inner);
EulerRotation inverse(const EulerRotation& rot);

/// Wigner small-d matrix for spin j = n/2, row-major (n+1)x(n+1).
/// Entry [out][in] is <j, out - j| exp(-i beta J_y) |j, in - j>, with both
/// indices counting mode-1 photons. Evaluated through Jacobi polynomials,
/// which stay accurate at n in the hundreds where the alternating factorial
/// sum cancels catastrophically.
std::vector<double> wigner_small_d(int n, double beta);

/// Applies the SU(2) transformation D(alpha, beta, gamma) to the amplitudes.
PureFockState apply_su2(const PureFockState& state, const EulerRotation& rot);

}  // namespace polmaj

#endif  // POLMAJ_ROTATION_HPP_
