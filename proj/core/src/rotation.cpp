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

#include "polmaj/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polmaj {
namespace {

constexpr double kPi = std::numbers::pi;

bool in_half_open_pi(double a) { return a > -kPi && a <= kPi; }

// Wraps into (-pi, pi].
double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

RotationMatrix rz(double a) {
  const double c = std::cos(a), s = std::sin(a);
  return {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
}

RotationMatrix ry(double b) {
  const double c = std::cos(b), s = std::sin(b);
  return {{{c, 0.0, s}, {0.0, 1.0, 0.0}, {-s, 0.0, c}}};
}

RotationMatrix multiply(const RotationMatrix& a, const RotationMatrix& b) {
  RotationMatrix r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

double log_factorial(int k) { return std::lgamma(static_cast<double>(k) + 1.0); }

// Jacobi polynomial P_k^(a,b)(x) by the forward three-term recurrence, which
// is stable on [-1, 1].
double jacobi(int k, int a, int b, double x) {
  double p0 = 1.0;
  if (k == 0) return p0;
  double p1 = (a + 1) + 0.5 * (a + b + 2) * (x - 1.0);
  for (int i = 2; i <= k; ++i) {
    const double ab = a + b;
    const double t = 2.0 * i + ab;
    const double num = (t - 1.0) * (t * (t - 2.0) * x + a * a - b * b) * p1 -
                       2.0 * (i + a - 1.0) * (i + b - 1.0) * t * p0;
    const double den = 2.0 * i * (i + ab) * (t - 2.0);
    p0 = p1;
    p1 = num / den;
  }
  return p1;
}

}  // namespace

EulerRotation::EulerRotation(double alpha, double beta, double gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma) {
  if (!(beta >= 0.0 && beta <= kPi) || !in_half_open_pi(alpha) ||
      !in_half_open_pi(gamma)) {
    throw std::invalid_argument("Euler angles outside canonical ranges");
  }
}

RotationMatrix to_matrix(const EulerRotation& rot) {
  return multiply(multiply(rz(rot.alpha()), ry(rot.beta())), rz(rot.gamma()));
}

EulerRotation from_matrix(const RotationMatrix& m) {
  const double cb = std::clamp(m[2][2], -1.0, 1.0);
  const double beta = std::acos(cb);
  const double sb = std::sin(beta);
  double alpha = 0.0;
  double gamma = 0.0;
  if (sb > 1e-12) {
    alpha = std::atan2(m[1][2], m[0][2]);
    gamma = std::atan2(m[2][1], -m[2][0]);
  } else if (cb > 0.0) {
    // Rz(alpha + gamma); fold everything into alpha.
    alpha = std::atan2(m[1][0], m[0][0]);
  } else {
    // Rz(alpha) Ry(pi) Rz(gamma) = Rz(alpha - gamma) Ry(pi).
    alpha = std::atan2(-m[0][1], m[1][1]);
  }
  return EulerRotation(wrap_angle(alpha), std::clamp(beta, 0.0, kPi),
                       wrap_angle(gamma));
}

EulerRotation compose(const EulerRotation& outer, const EulerRotation& inner) {
  return from_matrix(multiply(to_matrix(outer), to_matrix(inner)));
}

EulerRotation inverse(const EulerRotation& rot) {
  const RotationMatrix m = to_matrix(rot);
  RotationMatrix t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return from_matrix(t);
}

std::vector<double> wigner_small_d(int n, double beta) {
  if (n < 0) throw std::invalid_argument("wigner_small_d: negative n");
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  std::vector<double> d(dim * dim, 0.0);

  const double x = std::cos(beta);
  const double s = std::sin(beta / 2.0);
  const double c = std::cos(beta / 2.0);
  const double log_s = s > 0.0 ? std::log(s) : 0.0;
  const double log_c = c > 0.0 ? std::log(c) : 0.0;

  // d = xi sqrt(k! (k+mu+nu)! / ((k+mu)! (k+nu)!)) s^mu c^nu P_k^(mu,nu)(x),
  // with k the smallest of a, n-a, b, n-b. All doubled spins are photon
  // counts here: a = j + m' (out), b = j + m (in).
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      const int two_m_out = 2 * a - n;
      const int two_m_in = 2 * b - n;
      const int k = std::min({a, n - a, b, n - b});
      int mu = 0;
      int nu = 0;
      bool negate = false;
      if (k == b) {
        mu = a - b;
        nu = -(two_m_out + two_m_in) / 2;
        negate = (a - b) % 2 != 0;
      } else if (k == n - b) {
        mu = b - a;
        nu = (two_m_out + two_m_in) / 2;
      } else if (k == a) {
        mu = b - a;
        nu = -(two_m_out + two_m_in) / 2;
      } else {
        mu = a - b;
        nu = (two_m_out + two_m_in) / 2;
        negate = (a - b) % 2 != 0;
      }
      if ((mu > 0 && !(s > 0.0)) || (nu > 0 && !(c > 0.0))) continue;
      const double log_pref =
          0.5 * (log_factorial(k) + log_factorial(k + mu + nu) - log_factorial(k + mu) -
                 log_factorial(k + nu)) +
          mu * log_s + nu * log_c;
      double v = std::exp(log_pref) * jacobi(k, mu, nu, x);
      d[static_cast<std::size_t>(a) * dim + static_cast<std::size_t>(b)] = negate ? -v : v;
    }
  }
  return d;
}

PureFockState apply_su2(const PureFockState& state, const EulerRotation& rot) {
  const int n = state.photon_number();
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  const std::vector<double> d = wigner_small_d(n, rot.beta());
  const double j = 0.5 * n;

  std::vector<Complex> out(dim);
  for (int a = 0; a <= n; ++a) {
    Complex acc{};
    for (int b = 0; b <= n; ++b) {
      const double mu_in = b - j;
      acc += d[static_cast<std::size_t>(a) * dim + static_cast<std::size_t>(b)] *
             std::polar(1.0, -rot.gamma() * mu_in) * state.amplitude(b);
    }
    const double mu_out = a - j;
    out[static_cast<std::size_t>(a)] = std::polar(1.0, -rot.alpha() * mu_out) * acc;
  }
  return PureFockState::normalized(std::move(out));
}

}  // namespace polmaj
