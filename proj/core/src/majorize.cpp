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

#include "polmaj/majorize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace polmaj {
namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

LorenzCurve lorenz(const DiscreteDistribution& p) {
  // Equal values are interchangeable in S_k, so sorting by value alone is
  // already deterministic.
  std::vector<double> sorted(p.p().begin(), p.p().end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double sum = 0.0;
  double carry = 0.0;
  for (double& v : sorted) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
    v = sum + carry;
  }
  return LorenzCurve(std::move(sorted));
}

Verdict compare(const LorenzCurve& a, const LorenzCurve& b, double tol) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("compare: Lorenz curves of different length (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
  if (!std::isfinite(tol) || tol < 0.0) {
    throw std::invalid_argument("compare: tolerance must be finite and >= 0");
  }
  Verdict v;
  v.max_a_over_b = -std::numeric_limits<double>::infinity();
  v.max_b_over_a = -std::numeric_limits<double>::infinity();
  std::size_t k_a = 0;
  std::size_t k_b = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    if (d > v.max_a_over_b) {
      v.max_a_over_b = d;
      k_a = k;
    }
    if (-d > v.max_b_over_a) {
      v.max_b_over_a = -d;
      k_b = k;
    }
  }
  const bool a_beyond = v.max_a_over_b > tol;
  const bool b_beyond = v.max_b_over_a > tol;
  if (a_beyond) v.a_exceeds_at = k_a + 1;
  if (b_beyond) v.b_exceeds_at = k_b + 1;
  if (a_beyond && b_beyond) {
    v.relation = Relation::kIncomparable;
  } else if (a_beyond) {
    v.relation = Relation::kMajorizes;
  } else if (b_beyond) {
    v.relation = Relation::kMajorizedBy;
  } else {
    v.relation = Relation::kEqual;
  }
  return v;
}

Verdict flipped(const Verdict& v) {
  Verdict f = v;
  std::swap(f.a_exceeds_at, f.b_exceeds_at);
  std::swap(f.max_a_over_b, f.max_b_over_a);
  if (v.relation == Relation::kMajorizes) f.relation = Relation::kMajorizedBy;
  if (v.relation == Relation::kMajorizedBy) f.relation = Relation::kMajorizes;
  return f;
}

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::kEqual:
      return "equal";
    case Relation::kMajorizes:
      return "majorizes";
    case Relation::kMajorizedBy:
      return "majorized_by";
    case Relation::kIncomparable:
      return "incomparable";
  }
  return "unknown";
}

std::string OrderReport::chain(const Glyphs& glyphs) const {
  std::vector<std::string> layer_text;
  for (const auto& layer : layers) {
    std::vector<std::string> class_text;
    for (const auto& cls : layer) {
      std::vector<std::string> members;
      for (std::size_t i : cls) members.push_back(names[i]);
      class_text.push_back(join(members, " " + glyphs.equal + " "));
    }
    layer_text.push_back(join(class_text, " " + glyphs.incomparable + " "));
  }
  return join(layer_text, " " + glyphs.precedes + " ");
}

OrderReport partial_order(const std::vector<NamedDistribution>& dists, double tol) {
  if (dists.empty()) throw std::invalid_argument("partial_order: no inputs");
  const std::size_t count = dists.size();
  for (const auto& d : dists) {
    if (d.dist.size() != dists.front().dist.size()) {
      throw std::invalid_argument("partial_order: distributions on different grids");
    }
    if (d.dist.grid() && dists.front().dist.grid() &&
        !(*d.dist.grid() == *dists.front().dist.grid())) {
      throw std::invalid_argument("partial_order: distributions on different grids");
    }
  }

  std::vector<LorenzCurve> curves;
  curves.reserve(count);
  for (const auto& d : dists) curves.push_back(lorenz(d.dist));

  OrderReport report;
  for (const auto& d : dists) report.names.push_back(d.name);
  report.matrix.assign(count, std::vector<Verdict>(count));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      report.matrix[i][j] = compare(curves[i], curves[j], tol);
      report.matrix[j][i] = flipped(report.matrix[i][j]);
    }
  }
  const auto below = [&](std::size_t i, std::size_t j) {
    return report.matrix[i][j].relation == Relation::kMajorizedBy;
  };

  // Equal-classes, ordered by their first member.
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (report.matrix[i][j].relation == Relation::kEqual) {
        parent[find_root(parent, j)] = find_root(parent, i);
      }
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of(count);
  std::vector<std::size_t> root_class(count, count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t r = find_root(parent, i);
    if (root_class[r] == count) {
      root_class[r] = classes.size();
      classes.emplace_back();
    }
    class_of[i] = root_class[r];
    classes[root_class[r]].push_back(i);
  }
  // Equality within tolerance need not be transitive.
  for (const auto& cls : classes)
    for (std::size_t x = 0; x < cls.size(); ++x)
      for (std::size_t y = x + 1; y < cls.size(); ++y) {
        const Verdict& v = report.matrix[cls[x]][cls[y]];
        if (v.relation != Relation::kEqual) {
          report.transitivity_violations.push_back(
              report.names[cls[x]] + " and " + report.names[cls[y]] +
              " share an equal-class but compare as " + relation_name(v.relation));
        }
      }

  // Longest-path layering over the class DAG (Kahn).
  const std::size_t nc = classes.size();
  std::vector<std::vector<bool>> edge(nc, std::vector<bool>(nc, false));
  std::vector<int> indegree(nc, 0);
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = 0; b < nc; ++b)
      if (a != b && below(classes[a].front(), classes[b].front())) {
        edge[a][b] = true;
        ++indegree[b];
      }
  std::vector<int> level(nc, 0);
  std::vector<bool> done(nc, false);
  std::vector<std::size_t> ready;
  for (std::size_t c = 0; c < nc; ++c)
    if (indegree[c] == 0) ready.push_back(c);
  std::size_t processed = 0;
  while (!ready.empty()) {
    const std::size_t c = ready.back();
    ready.pop_back();
    done[c] = true;
    ++processed;
    for (std::size_t b = 0; b < nc; ++b) {
      if (!edge[c][b]) continue;
      level[b] = std::max(level[b], level[c] + 1);
      if (--indegree[b] == 0) ready.push_back(b);
    }
  }
  int max_level = 0;
  for (std::size_t c = 0; c < nc; ++c)
    if (done[c]) max_level = std::max(max_level, level[c]);
  if (processed != nc) {
    report.transitivity_violations.push_back("cycle in majorization order");
    for (std::size_t c = 0; c < nc; ++c)
      if (!done[c]) level[c] = max_level + 1;
    max_level += 1;
  }
  report.layers.assign(static_cast<std::size_t>(max_level) + 1, {});
  for (std::size_t c = 0; c < nc; ++c) {
    report.layers[static_cast<std::size_t>(level[c])].push_back(classes[c]);
  }
  std::erase_if(report.layers, [](const auto& l) { return l.empty(); });

  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      for (std::size_t k = 0; k < count; ++k) {
        if (i == j || j == k || i == k) continue;
        if (below(i, j) && below(j, k) && !below(i, k)) {
          report.transitivity_violations.push_back(
              report.names[i] + " < " + report.names[j] + " < " + report.names[k] +
              " but " + report.names[i] + " vs " + report.names[k] + " is " +
              relation_name(report.matrix[i][k].relation));
        }
      }
  return report;
}

DiscreteDistribution t_transform(const DiscreteDistribution& p, std::size_t i,
                                 std::size_t j, double lambda) {
  if (i == j || i >= p.size() || j >= p.size()) {
    throw std::invalid_argument("t_transform: indices must be distinct and in range");
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("t_transform: lambda must lie in [0, 1]");
  }
  std::vector<double> out(p.p().begin(), p.p().end());
  const double pi = p[i];
  const double pj = p[j];
  out[i] = (1.0 - lambda) * pi + lambda * pj;
  out[j] = lambda * pi + (1.0 - lambda) * pj;
  return DiscreteDistribution::from_probabilities(std::move(out), p.raw_mass(), p.grid());
}

DiscreteDistribution permutation_mix(const DiscreteDistribution& p,
                                     const std::vector<Permutation>& perms,
                                     const std::vector<double>& weights) {
  if (perms.empty() || perms.size() != weights.size()) {
    throw std::invalid_argument("permutation_mix: need one weight per permutation");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::invalid_argument("permutation_mix: weights must be nonnegative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("permutation_mix: weights must sum to 1");
  }
  const std::size_t n = p.size();
  for (const auto& perm : perms) {
    if (perm.size() != n) {
      throw std::invalid_argument("permutation_mix: permutation length mismatch");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t v : perm) {
      if (v >= n || seen[v]) {
        throw std::invalid_argument("permutation_mix: not a permutation");
      }
      seen[v] = true;
    }
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t t = 0; t < perms.size(); ++t) {
    for (std::size_t i = 0; i < n; ++i) out[i] += weights[t] * p[perms[t][i]];
  }
  return DiscreteDistribution::from_probabilities(std::move(out), p.raw_mass(), p.grid());
}

}  // namespace polmaj
