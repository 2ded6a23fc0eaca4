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

#include "cli/figures.hpp"

#include <algorithm>

namespace polmaj::cli {

// States are listed in chain order so that equal-classes and incomparable
// layers print in the reference order.
const std::vector<Figure>& figures() {
  static const std::vector<Figure> kFigures = {
      {"fig3", "two-photon states",
       {"noon:n=2", "squeezed:n=2", "hs:n=2", "phase:n=2", "coherent:n=2"},
       "N ≡ S ≡ H ≺ P ≺ C"},
      {"fig4", "three-photon states",
       {"noon:n=3", "hs:n=3", "squeezed:n=3", "phase:n=3", "coherent:n=3"},
       "N ≡ H ≺ S ≺ P ≺ C"},
      {"fig5", "four-photon states",
       {"hs:n=4", "squeezed:n=4", "noon:n=4", "phase:n=4", "coherent:n=4"},
       "H ≺ S ⋈ N ≺ P ≺ C"},
      {"fig6", "five-photon states",
       {"hs:n=5", "noon:n=5", "squeezed:n=5", "phase:n=5", "coherent:n=5"},
       "H ≺ N ≺ S ≺ P ≺ C"},
      {"fig7", "coherent n=2 versus N00N n=6",
       {"coherent:n=2", "noon:n=6"},
       "C ⋈ N"},
      {"fig8", "indefinite photon number at nbar=10",
       {"tmsv:nbar=10", "thermal:nbar=10", "glauber:nbar=10"},
       "S ≺ T ≺ C"},
  };
  return kFigures;
}

std::optional<Figure> find_figure(const std::string& id) {
  const auto& all = figures();
  const auto it = std::find_if(all.begin(), all.end(),
                               [&](const Figure& f) { return f.id == id; });
  if (it == all.end()) return std::nullopt;
  return *it;
}

}  // namespace polmaj::cli
