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

#include "cli/commands.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polmaj/measures.hpp"

namespace polmaj::cli {
namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_output(const std::optional<std::string>& path, const std::string& content,
                  std::ostream& fallback) {
  if (!path) {
    fallback << content;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + *path + "'");
  file << content;
  if (!file) throw std::runtime_error("failed writing output file '" + *path + "'");
}

json grid_json(const GridSpec& g) { return {{"n_theta", g.n_theta}, {"n_phi", g.n_phi}}; }

json verdict_matrix_json(const OrderReport& r) {
  json m = json::array();
  for (const auto& row : r.matrix) {
    json jr = json::array();
    for (const auto& v : row) jr.push_back(relation_name(v.relation));
    m.push_back(jr);
  }
  return m;
}

json witnesses_json(const OrderReport& r) {
  json w = json::array();
  for (std::size_t i = 0; i < r.names.size(); ++i) {
    for (std::size_t j = i + 1; j < r.names.size(); ++j) {
      const Verdict& v = r.matrix[i][j];
      if (v.relation != Relation::kIncomparable) continue;
      w.push_back({{"a", r.names[i]},
                   {"b", r.names[j]},
                   {"a_exceeds_at", *v.a_exceeds_at},
                   {"b_exceeds_at", *v.b_exceeds_at},
                   {"max_a_over_b", v.max_a_over_b},
                   {"max_b_over_a", v.max_b_over_a}});
    }
  }
  return w;
}

std::vector<LorenzCurve> curves_of(const EvaluatedSet& set) {
  std::vector<LorenzCurve> curves;
  for (const auto& d : set.dists) curves.push_back(lorenz(d));
  return curves;
}

// Columns k, S_k_<label>... for plotting.
std::string lorenz_csv(const std::vector<std::string>& labels,
                       const std::vector<LorenzCurve>& curves) {
  std::string out = "k";
  for (const auto& l : labels) out += ",S_k_" + l;
  out += '\n';
  const std::size_t n = curves.empty() ? 0 : curves.front().size();
  for (std::size_t k = 0; k < n; ++k) {
    out += std::to_string(k + 1);
    for (const auto& c : curves) {
      out += ',';
      out += num(c[k]);
    }
    out += '\n';
  }
  return out;
}

json lorenz_json(const std::vector<std::string>& labels,
                 const std::vector<LorenzCurve>& curves) {
  json l = json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    l[labels[i]] = std::vector<double>(curves[i].s().begin(), curves[i].s().end());
  }
  return l;
}

json order_document(const ChainResult& r, const RunConfig& cfg,
                    const std::vector<LorenzCurve>& curves) {
  json states = json::array();
  json masses = json::object();
  for (std::size_t i = 0; i < r.set.states.size(); ++i) {
    states.push_back(r.set.states[i].text);
    masses[r.set.labels[i]] = r.set.dists[i].raw_mass();
  }
  return {{"grid", grid_json(cfg.grid())},
          {"tol", cfg.tol},
          {"states", states},
          {"labels", r.set.labels},
          {"verdict_matrix", verdict_matrix_json(r.report)},
          {"chain", r.report.chain()},
          {"raw_masses", masses},
          {"witnesses", witnesses_json(r.report)},
          {"transitivity_violations", r.report.transitivity_violations},
          {"lorenz", lorenz_json(r.set.labels, curves)}};
}

void print_matrix(const OrderReport& r, std::ostream& err) {
  std::size_t width = 14;
  for (const auto& n : r.names) width = std::max(width, n.size() + 2);
  err << std::string(width, ' ');
  for (const auto& n : r.names) err << n << std::string(width - n.size(), ' ');
  err << '\n';
  for (std::size_t i = 0; i < r.names.size(); ++i) {
    err << r.names[i] << std::string(width - r.names[i].size(), ' ');
    for (std::size_t j = 0; j < r.names.size(); ++j) {
      const std::string cell = i == j ? "-" : relation_name(r.matrix[i][j].relation);
      err << cell << std::string(width > cell.size() ? width - cell.size() : 1, ' ');
    }
    err << '\n';
  }
  for (std::size_t i = 0; i < r.names.size(); ++i)
    for (std::size_t j = i + 1; j < r.names.size(); ++j) {
      const Verdict& v = r.matrix[i][j];
      if (!v.has_witnesses()) continue;
      err << "witnesses " << r.names[i] << " vs " << r.names[j] << ": k=" << *v.a_exceeds_at
          << " (" << r.names[i] << " above), k=" << *v.b_exceeds_at << " (" << r.names[j]
          << " above)\n";
    }
  for (const auto& v : r.transitivity_violations) err << "transitivity: " << v << '\n';
}

bool same_relations(const OrderReport& a, const OrderReport& b) {
  for (std::size_t i = 0; i < a.matrix.size(); ++i)
    for (std::size_t j = 0; j < a.matrix.size(); ++j)
      if (a.matrix[i][j].relation != b.matrix[i][j].relation) return false;
  return true;
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNonFinite;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

bool locale_is_utf8() {
  for (const char* var : {"LC_ALL", "LC_CTYPE", "LANG"}) {
    const char* v = std::getenv(var);
    if (v == nullptr || *v == '\0') continue;
    std::string s(v);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s.find("utf-8") != std::string::npos || s.find("utf8") != std::string::npos;
  }
  return false;
}

}  // namespace

const std::vector<double>& renyi_sweep() {
  static const std::vector<double> kSweep = {0.5, 1.0, 2.0, 5.0};
  return kSweep;
}

const std::vector<double>& alpha_sweep() {
  static const std::vector<double> kSweep = [] {
    std::vector<double> a;
    for (int i = 1; i <= 19; ++i) a.push_back(i / 20.0);
    return a;
  }();
  return kSweep;
}

EvaluatedSet evaluate_states(const std::vector<std::string>& specs, const RunConfig& cfg,
                             LabelStyle style) {
  cfg.validate();
  EvaluatedSet set;
  for (const auto& s : specs) set.states.push_back(parse_state_spec(s, cfg.seed));
  set.labels = make_labels(set.states, style);
  const GridSpec grid = cfg.grid();
  DiscretizeOptions options;
  options.threads = cfg.threads;
  for (const auto& s : set.states) set.dists.push_back(discretize(s.state, grid, options));
  return set;
}

ChainResult evaluate_chain(const std::vector<std::string>& specs, const RunConfig& cfg,
                           LabelStyle style) {
  ChainResult r{evaluate_states(specs, cfg, style), {}};
  std::vector<NamedDistribution> named;
  for (std::size_t i = 0; i < r.set.dists.size(); ++i) {
    named.push_back({r.set.labels[i], r.set.dists[i]});
  }
  r.report = partial_order(named, cfg.tol);
  return r;
}

ReproduceResult reproduce_figure(const Figure& figure, const RunConfig& cfg) {
  ReproduceResult r{figure, evaluate_chain(figure.states, cfg), {}, false, false};
  RunConfig doubled = cfg;
  doubled.n_theta *= 2;
  doubled.n_phi *= 2;
  r.doubled = evaluate_chain(figure.states, doubled);
  r.stable = same_relations(r.base.report, r.doubled.report);
  r.matches_expected = r.base.report.chain() == figure.expected_chain;
  return r;
}

std::string verdict_line(const std::string& a, const std::string& b, const Verdict& v,
                         const Glyphs& glyphs) {
  switch (v.relation) {
    case Relation::kEqual:
      return a + " " + glyphs.equal + " " + b;
    case Relation::kMajorizes:
      return b + " " + glyphs.precedes + " " + a;
    case Relation::kMajorizedBy:
      return a + " " + glyphs.precedes + " " + b;
    case Relation::kIncomparable:
      return a + " " + glyphs.incomparable + " " + b;
  }
  return "";
}

int cmd_qdist(const std::string& spec, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const EvaluatedSet set = evaluate_states({spec}, cfg, LabelStyle::kKind);
    const auto& dist = set.dists.front();
    const GridSpec grid = cfg.grid();
    const auto dirs = grid_directions(grid);
    std::string content;
    if (cfg.format == OutputFormat::kCsv) {
      content = "# state=" + spec + "\n# grid=" + std::to_string(grid.n_theta) + "x" +
                std::to_string(grid.n_phi) + "\n# raw_mass=" + num(dist.raw_mass()) +
                "\nj,theta,phi,p\n";
      for (std::size_t j = 0; j < dist.size(); ++j) {
        content += std::to_string(j + 1) + ',' + num(dirs[j].theta) + ',' + num(dirs[j].phi) +
                   ',' + num(dist[j]) + '\n';
      }
    } else {
      std::vector<std::size_t> js(dist.size());
      std::vector<double> thetas(dist.size()), phis(dist.size());
      for (std::size_t j = 0; j < dist.size(); ++j) {
        js[j] = j + 1;
        thetas[j] = dirs[j].theta;
        phis[j] = dirs[j].phi;
      }
      const json doc = {
          {"state", spec},
          {"grid", grid_json(grid)},
          {"raw_mass", dist.raw_mass()},
          {"pixels",
           {{"j", js},
            {"theta", thetas},
            {"phi", phis},
            {"p", std::vector<double>(dist.p().begin(), dist.p().end())}}}};
      content = doc.dump() + "\n";
    }
    err << "raw_mass " << num(dist.raw_mass()) << '\n';
    write_output(cfg.out, content, out);
    return kExitOk;
  });
}

int cmd_compare(const std::string& a, const std::string& b, const RunConfig& cfg,
                const Glyphs& glyphs, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ChainResult r = evaluate_chain({a, b}, cfg, LabelStyle::kKind);
    const Verdict& v = r.report.matrix[0][1];
    const auto& labels = r.set.labels;
    out << verdict_line(labels[0], labels[1], v, glyphs) << '\n';
    err << "max S_k(" << labels[0] << ") - S_k(" << labels[1] << ") = " << num(v.max_a_over_b)
        << ", reverse " << num(v.max_b_over_a) << ", tol " << num(cfg.tol) << '\n';
    if (v.has_witnesses()) {
      err << "witnesses: k=" << *v.a_exceeds_at << " (" << labels[0] << " above), k="
          << *v.b_exceeds_at << " (" << labels[1] << " above)\n";
    }
    if (cfg.out) {
      const auto curves = curves_of(r.set);
      write_output(cfg.out,
                   cfg.format == OutputFormat::kCsv
                       ? lorenz_csv(labels, curves)
                       : order_document(r, cfg, curves).dump() + "\n",
                   out);
    }
    return kExitOk;
  });
}

int cmd_chain(const std::vector<std::string>& specs, const RunConfig& cfg,
              const Glyphs& glyphs, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (specs.size() < 2) throw SpecError("chain needs at least two states");
    const ChainResult r = evaluate_chain(specs, cfg, LabelStyle::kLetter);
    out << r.report.chain(glyphs) << '\n';
    print_matrix(r.report, err);
    if (cfg.out) {
      const auto curves = curves_of(r.set);
      write_output(cfg.out,
                   cfg.format == OutputFormat::kCsv
                       ? lorenz_csv(r.set.labels, curves)
                       : order_document(r, cfg, curves).dump() + "\n",
                   out);
    }
    return kExitOk;
  });
}

int cmd_reproduce(const std::string& figure_id, const RunConfig& cfg, const Glyphs& glyphs,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto figure = find_figure(figure_id);
    if (!figure) {
      std::string known;
      for (const auto& f : figures()) known += " " + f.id;
      throw SpecError("unknown figure '" + figure_id + "'; known:" + known);
    }
    const ReproduceResult r = reproduce_figure(*figure, cfg);
    out << r.base.report.chain(glyphs) << '\n';
    err << figure->id << ": " << figure->title << '\n';
    print_matrix(r.base.report, err);
    err << "expected ordering: " << figure->expected_chain
        << (r.matches_expected ? " (match)" : " (MISMATCH)") << '\n';
    err << "doubled grid " << 2 * cfg.n_theta << "x" << 2 * cfg.n_phi << ": "
        << r.doubled.report.chain(glyphs) << " -> stability " << (r.stable ? "pass" : "FAIL")
        << '\n';
    const auto curves = curves_of(r.base.set);
    std::string content;
    if (cfg.format == OutputFormat::kCsv) {
      content = lorenz_csv(r.base.set.labels, curves);
    } else {
      json doc = order_document(r.base, cfg, curves);
      doc["figure"] = figure->id;
      doc["expected_chain"] = figure->expected_chain;
      doc["matches_expected"] = r.matches_expected;
      doc["stability"] = {{"grid", grid_json(GridSpec::make(2 * cfg.n_theta, 2 * cfg.n_phi))},
                          {"chain", r.doubled.report.chain()},
                          {"verdicts_unchanged", r.stable}};
      content = doc.dump() + "\n";
    }
    const std::string path = cfg.out.value_or(figure->id + "." + format_name(cfg.format));
    write_output(path, content, out);
    err << "wrote " << path << '\n';
    return kExitOk;
  });
}

int cmd_measures(const std::vector<std::string>& specs, const RunConfig& cfg, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    if (specs.empty()) throw SpecError("measures needs at least one state");
    const EvaluatedSet set = evaluate_states(specs, cfg, LabelStyle::kKind);
    std::vector<std::vector<double>> renyi_rows;
    std::vector<std::vector<std::size_t>> k_rows;
    for (double q : renyi_sweep()) {
      std::vector<double> row;
      for (const auto& d : set.dists) row.push_back(renyi(d, EntropyIndex(q)));
      renyi_rows.push_back(row);
    }
    std::vector<LorenzCurve> curves = curves_of(set);
    for (double a : alpha_sweep()) {
      std::vector<std::size_t> row;
      for (const auto& c : curves) row.push_back(confidence_interval(c, a));
      k_rows.push_back(row);
    }
    std::string content;
    if (cfg.format == OutputFormat::kCsv) {
      content = "quantity,param";
      for (const auto& l : set.labels) content += "," + l;
      content += '\n';
      for (std::size_t i = 0; i < renyi_sweep().size(); ++i) {
        content += "renyi," + num(renyi_sweep()[i]);
        for (double v : renyi_rows[i]) content += "," + num(v);
        content += '\n';
      }
      for (std::size_t i = 0; i < alpha_sweep().size(); ++i) {
        content += "K," + num(alpha_sweep()[i]);
        for (std::size_t v : k_rows[i]) content += "," + std::to_string(v);
        content += '\n';
      }
    } else {
      json renyi_doc = {{"q", renyi_sweep()}};
      json k_doc = {{"alpha", alpha_sweep()}};
      json masses = json::object();
      json states = json::array();
      for (std::size_t s = 0; s < set.labels.size(); ++s) {
        std::vector<double> rv;
        std::vector<std::size_t> kv;
        for (const auto& row : renyi_rows) rv.push_back(row[s]);
        for (const auto& row : k_rows) kv.push_back(row[s]);
        renyi_doc[set.labels[s]] = rv;
        k_doc[set.labels[s]] = kv;
        masses[set.labels[s]] = set.dists[s].raw_mass();
        states.push_back(set.states[s].text);
      }
      const json doc = {{"grid", grid_json(cfg.grid())}, {"states", states},
                        {"labels", set.labels},          {"raw_masses", masses},
                        {"renyi", renyi_doc},            {"confidence_interval", k_doc}};
      content = doc.dump() + "\n";
    }
    write_output(cfg.out, content, out);
    return kExitOk;
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Majorization of SU(2) Q distributions of two-mode polarization states",
               "polmaj"};
  app.require_subcommand(1);

  struct Flags {
    int n_theta = 0;
    int n_phi = 0;
    double tol = 0.0;
    std::uint64_t seed = 0;
    std::string format;
    std::string out;
    std::string config;
    unsigned threads = 0;
    std::string glyphs = "auto";
  } flags;
  CLI::Option* o_n_theta = nullptr;
  CLI::Option* o_n_phi = nullptr;
  CLI::Option* o_tol = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_format = nullptr;
  CLI::Option* o_out = nullptr;
  CLI::Option* o_config = nullptr;
  CLI::Option* o_threads = nullptr;

  // Options are accepted after the subcommand name.
  std::vector<std::vector<CLI::Option*>> per_command;
  const auto add_common = [&](CLI::App* sub) {
    std::vector<CLI::Option*> o;
    o.push_back(sub->add_option("--n-theta", flags.n_theta, "cos(theta) bands (default 400)"));
    o.push_back(sub->add_option("--n-phi", flags.n_phi, "azimuth sectors (default 400)"));
    o.push_back(sub->add_option("--tol", flags.tol, "verdict tolerance on S_k (default 1e-4)"));
    o.push_back(sub->add_option("--seed", flags.seed, "seed for random states without one"));
    o.push_back(sub->add_option("--format", flags.format, "csv or json")
                    ->check(CLI::IsMember({"csv", "json"})));
    o.push_back(sub->add_option("--out", flags.out, "output path"));
    o.push_back(sub->add_option("--config", flags.config, "key=value or JSON config file"));
    o.push_back(sub->add_option("--threads", flags.threads, "pixel evaluation threads"));
    sub->add_option("--glyphs", flags.glyphs, "verdict symbols: auto, unicode or ascii")
        ->check(CLI::IsMember({"auto", "unicode", "ascii"}));
    per_command.push_back(o);
  };

  std::vector<std::string> states;
  std::string figure_id;

  auto* qdist = app.add_subcommand("qdist", "discretized Q distribution of one state");
  qdist->add_option("state", states, "state designator, e.g. coherent:n=4")->required()
      ->expected(1);
  add_common(qdist);
  auto* compare_cmd = app.add_subcommand("compare", "majorization verdict between two states");
  compare_cmd->add_option("states", states, "two state designators")->required()->expected(2);
  add_common(compare_cmd);
  auto* chain = app.add_subcommand("chain", "majorization order over a set of states");
  chain->add_option("states", states, "two or more state designators")->required()
      ->expected(2, 1 << 20);
  add_common(chain);
  auto* reproduce = app.add_subcommand("reproduce", "regenerate a figure dataset (fig3..fig8)");
  reproduce->add_option("figure", figure_id, "figure id")->required();
  add_common(reproduce);
  auto* measures = app.add_subcommand("measures", "Renyi entropies and confidence intervals");
  measures->add_option("states", states, "one or more state designators")->required()
      ->expected(1, 1 << 20);
  add_common(measures);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto& used = [&]() -> const std::vector<CLI::Option*>& {
    const CLI::App* subs[] = {qdist, compare_cmd, chain, reproduce, measures};
    for (std::size_t i = 0; i < 5; ++i)
      if (subs[i]->parsed()) return per_command[i];
    return per_command[0];
  }();
  o_n_theta = used[0];
  o_n_phi = used[1];
  o_tol = used[2];
  o_seed = used[3];
  o_format = used[4];
  o_out = used[5];
  o_config = used[6];
  o_threads = used[7];

  RunConfig cfg;
  const int status = guarded(err, [&] {
    // defaults < config file < flags
    if (o_config->count()) apply_config_file(flags.config, cfg);
    if (o_n_theta->count()) cfg.n_theta = flags.n_theta;
    if (o_n_phi->count()) cfg.n_phi = flags.n_phi;
    if (o_tol->count()) cfg.tol = flags.tol;
    if (o_seed->count()) cfg.seed = flags.seed;
    if (o_format->count()) cfg.format = parse_format(flags.format);
    if (o_out->count()) cfg.out = flags.out;
    if (o_threads->count()) cfg.threads = flags.threads;
    cfg.validate();
    return kExitOk;
  });
  if (status != kExitOk) return status;

  Glyphs glyphs = Glyphs::ascii();
  if (flags.glyphs == "unicode" || (flags.glyphs == "auto" && locale_is_utf8())) {
    glyphs = Glyphs::unicode();
  }

  if (qdist->parsed()) return cmd_qdist(states.front(), cfg, out, err);
  if (compare_cmd->parsed()) return cmd_compare(states[0], states[1], cfg, glyphs, out, err);
  if (chain->parsed()) return cmd_chain(states, cfg, glyphs, out, err);
  if (reproduce->parsed()) return cmd_reproduce(figure_id, cfg, glyphs, out, err);
  return cmd_measures(states, cfg, out, err);
}

}  // namespace polmaj::cli
