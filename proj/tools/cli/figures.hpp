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

#ifndef POLMAJ_CLI_FIGURES_HPP_
#define POLMAJ_CLI_FIGURES_HPP_

#include <optional>
#include <string>
#include <vector>

namespace polmaj::cli {

/// A reproducible state set with its reference ordering.
struct Figure {
  std::string id;
  std::string title;
  std::vector<std::string> states;
  /// Chain over letter labels with Unicode glyphs, e.g. "H ≺ N ≺ S ≺ P ≺ C".
  std::string expected_chain;
};

const std::vector<Figure>& figures();
std::optional<Figure> find_figure(const std::string& id);

}  // namespace polmaj::cli

#endif  // POLMAJ_CLI_FIGURES_HPP_
