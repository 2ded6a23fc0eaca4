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

#include "cli/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace polmaj::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_value(const std::string& key, const std::string& value) {
  T out{};
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), last, out);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError("invalid value '" + value + "' for config key '" + key + "'");
  }
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (n_theta <= 0 || n_phi <= 0 ||
      static_cast<long long>(n_theta) * static_cast<long long>(n_phi) < 2) {
    throw ConfigError("grid sizes must be positive with at least 2 pixels");
  }
  if (!std::isfinite(tol) || !(tol > 0.0)) throw ConfigError("tol must be > 0");
}

OutputFormat parse_format(const std::string& value) {
  if (value == "csv") return OutputFormat::kCsv;
  if (value == "json") return OutputFormat::kJson;
  throw ConfigError("format must be csv or json, got '" + value + "'");
}

std::string format_name(OutputFormat f) { return f == OutputFormat::kCsv ? "csv" : "json"; }

void apply_setting(const std::string& raw_key, const std::string& value, RunConfig& cfg) {
  std::string key = raw_key;
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "n_theta") {
    cfg.n_theta = parse_value<int>(key, value);
  } else if (key == "n_phi") {
    cfg.n_phi = parse_value<int>(key, value);
  } else if (key == "tol") {
    cfg.tol = parse_value<double>(key, value);
  } else if (key == "format") {
    cfg.format = parse_format(value);
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "seed") {
    cfg.seed = parse_value<std::uint64_t>(key, value);
  } else if (key == "threads") {
    cfg.threads = parse_value<unsigned>(key, value);
  } else {
    throw ConfigError("unknown config key '" + raw_key + "'");
  }
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  if (trim(text).starts_with("{")) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    for (const auto& [key, value] : doc.items()) {
      if (value.is_string()) {
        apply_setting(key, value.get<std::string>(), cfg);
      } else if (value.is_number_integer() || value.is_number_unsigned()) {
        apply_setting(key, std::to_string(value.get<long long>()), cfg);
      } else if (value.is_number_float()) {
        // dump() keeps the shortest round-trip representation.
        apply_setting(key, value.dump(), cfg);
      } else {
        throw ConfigError("config key '" + key + "' must be a string or number");
      }
    }
    return;
  }

  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    apply_setting(trim(line.substr(0, eq)), trim(line.substr(eq + 1)), cfg);
  }
}

}  // namespace polmaj::cli
