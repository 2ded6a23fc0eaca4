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

#ifndef POLMAJ_STATES_HPP_
#define POLMAJ_STATES_HPP_

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace polmaj {

using Complex = std::complex<double>;

/// Pure state of two field modes with a definite total photon number n.
///
/// Amplitude index m is the photon count in mode 1, so `amplitude(m)` is the
/// coefficient of |m, n-m>. States are equivalence classes up to a global
/// phase; compare them with `overlap_modulus`, not componentwise.
class PureFockState {
 public:
  /// Takes amplitudes for m = 0..n; the squared norm must be 1 within 1e-12.
  static PureFockState from_amplitudes(std::vector<Complex> amps);

  /// Rescales to unit norm. Rejects the zero vector.
  static PureFockState normalized(std::vector<Complex> amps);

  int photon_number() const { return static_cast<int>(amps_.size()) - 1; }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex amplitude(int m) const { return amps_.at(static_cast<std::size_t>(m)); }

 private:
  explicit PureFockState(std::vector<Complex> amps) : amps_(std::move(amps)) {}

  std::vector<Complex> amps_;
};

/// |<a|b>|; throws std::invalid_argument when photon numbers differ.
double overlap_modulus(const PureFockState& a, const PureFockState& b);

/// Convex mixture of pure states, possibly with different photon numbers.
class MixedState {
 public:
  struct Component {
    double weight;
    PureFockState state;
  };

  /// Weights must be nonnegative and sum to 1 within 1e-12.
  explicit MixedState(std::vector<Component> components);

  std::span<const Component> components() const { return components_; }

 private:
  std::vector<Component> components_;
};

enum class AnalyticKind { kGlauberCoherent, kThermal, kTwoModeSqueezedVacuum };

/// A state without definite photon number, handled through its closed-form Q.
struct AnalyticQFamily {
  AnalyticKind kind;
  double nbar;
};

// Fixed-n families. Each returns a normalized state in H_n.

PureFockState make_coherent(int n);
PureFockState make_phase(int n);
/// Twin-number state for even n, symmetric neighbour superposition for odd n.
/// Requires n >= 2.
PureFockState make_squeezed(int n);
/// (|n,0> + |0,n>)/sqrt(2). Requires n >= 1.
PureFockState make_noon(int n);
/// Hilbert-Schmidt extremal states, available for n in {2, 3, 4, 5} only.
PureFockState make_hs_extremal(int n);

/// Rejects negative or non-finite nbar.
AnalyticQFamily make_analytic(AnalyticKind kind, double nbar);

/// Haar-random pure state: normalized i.i.d. complex Gaussian amplitudes.
/// Deterministic for a given (n, seed) on a given standard library.
PureFockState random_pure(int n, std::uint64_t seed);

}  // namespace polmaj

#endif  // POLMAJ_STATES_HPP_
