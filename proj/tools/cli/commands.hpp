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

#ifndef POLMAJ_CLI_COMMANDS_HPP_
#define POLMAJ_CLI_COMMANDS_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "cli/figures.hpp"
#include "cli/run_config.hpp"
#include "cli/state_spec.hpp"
#include "polmaj/majorize.hpp"

namespace polmaj::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNonFinite = 3;

/// Renyi indices and confidence levels reported by `measures`.
const std::vector<double>& renyi_sweep();
const std::vector<double>& alpha_sweep();

struct EvaluatedSet {
  std::vector<ParsedState> states;
  std::vector<std::string> labels;
  std::vector<DiscreteDistribution> dists;
};

EvaluatedSet evaluate_states(const std::vector<std::string>& specs, const RunConfig& cfg,
                             LabelStyle style);

struct ChainResult {
  EvaluatedSet set;
  OrderReport report;
};

ChainResult evaluate_chain(const std::vector<std::string>& specs, const RunConfig& cfg,
                           LabelStyle style = LabelStyle::kLetter);

struct ReproduceResult {
  Figure figure;
  ChainResult base;
  ChainResult doubled;
  /// Every pairwise relation equal on the doubled grid.
  bool stable = false;
  bool matches_expected = false;
};

ReproduceResult reproduce_figure(const Figure& figure, const RunConfig& cfg);

/// "a ≺ b" style line for compare(a, b).
std::string verdict_line(const std::string& a, const std::string& b, const Verdict& v,
                         const Glyphs& glyphs);

// Subcommands. Each writes its data to cfg.out (or stdout where noted) and
// returns a process exit code.

/// Pixel table j, theta, phi, p_j; stdout when cfg.out is unset.
int cmd_qdist(const std::string& spec, const RunConfig& cfg, std::ostream& out,
              std::ostream& err);
/// Verdict line on stdout; Lorenz columns to cfg.out when set.
int cmd_compare(const std::string& a, const std::string& b, const RunConfig& cfg,
                const Glyphs& glyphs, std::ostream& out, std::ostream& err);
/// Chain line on stdout, verdict matrix on stderr, report to cfg.out when set.
int cmd_chain(const std::vector<std::string>& specs, const RunConfig& cfg,
              const Glyphs& glyphs, std::ostream& out, std::ostream& err);
/// Dataset to cfg.out (default "<id>.<format>"); chain line on stdout.
int cmd_reproduce(const std::string& figure_id, const RunConfig& cfg, const Glyphs& glyphs,
                  std::ostream& out, std::ostream& err);
/// Renyi and confidence-interval table; stdout when cfg.out is unset.
int cmd_measures(const std::vector<std::string>& specs, const RunConfig& cfg, std::ostream& out,
                 std::ostream& err);

/// Full command line entry point (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polmaj::cli

#endif  // POLMAJ_CLI_COMMANDS_HPP_
