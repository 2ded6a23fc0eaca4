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

#ifndef POLMAJ_MAJORIZE_HPP_
#define POLMAJ_MAJORIZE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "polmaj/sphere_grid.hpp"

namespace polmaj {

/// Ordered partial sums S_k, k = 1..N, of a distribution sorted descending.
/// s()[k - 1] holds S_k.
class LorenzCurve {
 public:
  explicit LorenzCurve(std::vector<double> s) : s_(std::move(s)) {}

  std::span<const double> s() const { return s_; }
  std::size_t size() const { return s_.size(); }
  double operator[](std::size_t i) const { return s_[i]; }

 private:
  std::vector<double> s_;
};

LorenzCurve lorenz(const DiscreteDistribution& p);

enum class Relation { kEqual, kMajorizes, kMajorizedBy, kIncomparable };

/// Outcome of comparing curve a against curve b.
struct Verdict {
  Relation relation = Relation::kEqual;
  /// 1-based k where a exceeds b by most, when that excess is beyond tol.
  std::optional<std::size_t> a_exceeds_at;
  /// 1-based k where b exceeds a by most, when that excess is beyond tol.
  std::optional<std::size_t> b_exceeds_at;
  /// max_k (S_k(a) - S_k(b)) and max_k (S_k(b) - S_k(a)).
  double max_a_over_b = 0.0;
  double max_b_over_a = 0.0;

  bool has_witnesses() const { return a_exceeds_at && b_exceeds_at; }
};

/// Verdict from a's point of view: kMajorizes means b < a.
/// Throws std::invalid_argument on length mismatch or a negative tol.
Verdict compare(const LorenzCurve& a, const LorenzCurve& b, double tol);

/// The same pair seen from the other side.
Verdict flipped(const Verdict& v);

std::string relation_name(Relation r);

struct NamedDistribution {
  std::string name;
  DiscreteDistribution dist;
};

struct Glyphs {
  std::string precedes;      // a majorized by b
  std::string incomparable;
  std::string equal;

  static Glyphs unicode() { return {"≺", "⋈", "≡"}; }
  static Glyphs ascii() { return {"<", "><", "=="}; }
};

struct OrderReport {
  std::vector<std::string> names;
  /// matrix[i][j] compares i against j.
  std::vector<std::vector<Verdict>> matrix;
  /// Layers from least to most majorizing, each a list of equal-classes.
  std::vector<std::vector<std::vector<std::size_t>>> layers;
  /// Triples where i < j and j < k but not i < k.
  std::vector<std::string> transitivity_violations;

  std::string chain(const Glyphs& glyphs = Glyphs::unicode()) const;
};

/// Pairwise verdicts plus a topological layering of the majorization order.
/// All inputs must share a grid. Throws std::invalid_argument otherwise.
OrderReport partial_order(const std::vector<NamedDistribution>& dists,
                          double tol);

/// Mixes components i and j (0-based):
/// (p_i, p_j) -> ((1-l) p_i + l p_j, l p_i + (1-l) p_j).
DiscreteDistribution t_transform(const DiscreteDistribution& p, std::size_t i,
                                 std::size_t j, double lambda);

using Permutation = std::vector<std::size_t>;

/// sum_j w_j Pi_j p with (Pi p)_i = p_{perm[i]}.
DiscreteDistribution permutation_mix(const DiscreteDistribution& p,
                                     const std::vector<Permutation>& perms,
                                     const std::vector<double>& weights);

}  // namespace polmaj

#endif  // POLMAJ_MAJORIZE_HPP_
