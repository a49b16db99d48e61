// Copyright 2026 The lindqsl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lqsl/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lqsl/error.hpp"

namespace lqsl {

namespace {

using nlohmann::json;

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"model",
       {"preset", "omega", "gamma", "theta", "n", "single_site", "hamiltonian", "lindblad",
        "psi0", "theta_target"}},
      {"qsl", {"theta_target"}},
      {"integrator", {"dt", "horizon"}},
      {"sweep", {"name", "values"}},
      {"output", {"path", "format"}},
      {"verify",
       {"seed", "models", "tolerance", "fisher_models", "log_samples", "differential_points",
        "step_fraction", "horizon_multiple", "algebraic_tolerance", "fisher_tolerance",
        "min_dim", "max_dim", "fisher_dt"}},
      {"fig1a", {"omegas", "gamma_min", "gamma_max", "points_per_decade", "theta",
                 "theta_target"}},
      {"fig1b", {"gamma", "theta_values", "theta_min", "theta_max", "theta_step"}},
      {"scaling", {"axis", "n_values", "gamma_values", "n", "gamma", "omega", "theta",
                   "theta_target"}},
      {"qfi", {"t_values", "window_scale"}},
      {"evolve", {"output_stride"}},
  };
  return keys;
}

const std::set<std::string>& sweepable() {
  static const std::set<std::string> names = {"omega", "gamma", "theta", "n",
                                              "theta_target"};
  return names;
}

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

std::string where(const RawConfig::Entry& e, const std::string& section,
                  const std::string& key) {
  return "line " + std::to_string(e.line) + ", [" + section + "] " + key + ": ";
}

int bracket_balance(std::string_view s) {
  int depth = 0;
  for (const char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
  }
  return depth;
}

double parse_plain(std::string_view text) {
  const std::string t = trim(text);
  double value = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (t.empty() || ec != std::errc() || ptr != last) {
    throw ConfigError("not a number: '" + t + "'");
  }
  return value;
}

json parse_json_value(const RawConfig::Entry& e, const std::string& section,
                      const std::string& key) {
  try {
    return json::parse(e.text);
  } catch (const json::exception& ex) {
    throw ConfigError(where(e, section, key) + "malformed array: " + ex.what());
  }
}

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ConfigError("expected a complex entry [re, im] or a real number");
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("expected a non-empty array of rows");
  const auto dim = static_cast<Eigen::Index>(j.size());
  ComplexMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw ConfigError("matrix must be square; row " + std::to_string(r) + " has wrong length");
    }
    for (Eigen::Index c = 0; c < dim; ++c) {
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

}  // namespace

double parse_number(std::string_view text) {
  std::string t = trim(text);
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  const auto pi_at = t.find("pi");
  if (pi_at == std::string::npos) return parse_plain(t);

  double factor = 1.0;
  const std::string before = t.substr(0, pi_at);
  if (before == "-") {
    factor = -1.0;
  } else if (!before.empty()) {
    if (before.back() != '*') throw ConfigError("not a number: '" + t + "'");
    factor = parse_plain(before.substr(0, before.size() - 1));
  }
  double divisor = 1.0;
  const std::string after = t.substr(pi_at + 2);
  if (!after.empty()) {
    if (after.front() != '/') throw ConfigError("not a number: '" + t + "'");
    divisor = parse_plain(after.substr(1));
  }
  return factor * std::numbers::pi / divisor;
}

RawConfig RawConfig::parse(std::string_view text) {
  RawConfig config;
  std::istringstream in{std::string(text)};
  std::string line;
  std::string section;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line.substr(0, line.find('#')));
    if (stripped.empty()) continue;

    if (stripped.front() == '[' && stripped.back() == ']' && bracket_balance(stripped) == 0 &&
        stripped.find('=') == std::string::npos) {
      section = trim(stripped.substr(1, stripped.size() - 2));
      if (!known_keys().contains(section)) {
        throw ConfigError("line " + std::to_string(line_no) + ": unknown section [" + section +
                          "]");
      }
      config.sections_[section];
      continue;
    }

    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    if (section.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": key outside of any [section]");
    }
    const std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    const std::size_t start_line = line_no;
    while (bracket_balance(value) > 0 && std::getline(in, line)) {
      ++line_no;
      value += " " + trim(line.substr(0, line.find('#')));
    }
    if (bracket_balance(value) != 0) {
      throw ConfigError("line " + std::to_string(start_line) + ", [" + section + "] " + key +
                        ": unbalanced brackets");
    }
    if (!known_keys().at(section).contains(key)) {
      throw ConfigError("line " + std::to_string(start_line) + ": unknown key '" + key +
                        "' in [" + section + "]");
    }
    if (value.empty()) {
      throw ConfigError("line " + std::to_string(start_line) + ", [" + section + "] " + key +
                        ": empty value");
    }
    auto [it, inserted] = config.sections_[section].try_emplace(key, Entry{value, start_line});
    if (!inserted) {
      throw ConfigError("line " + std::to_string(start_line) + ": duplicate key '" + key +
                        "' in [" + section + "]");
    }
  }
  return config;
}

const RawConfig::Entry* RawConfig::find(const std::string& section,
                                        const std::string& key) const {
  const auto s = sections_.find(section);
  if (s == sections_.end()) return nullptr;
  const auto e = s->second.find(key);
  return e == s->second.end() ? nullptr : &e->second;
}

bool RawConfig::has(const std::string& section, const std::string& key) const {
  return find(section, key) != nullptr;
}

std::optional<double> RawConfig::number(const std::string& section,
                                        const std::string& key) const {
  const Entry* e = find(section, key);
  if (!e) return std::nullopt;
  try {
    const double v = parse_number(e->text);
    if (!std::isfinite(v)) throw ConfigError("value is not finite");
    return v;
  } catch (const ConfigError& ex) {
    throw ConfigError(where(*e, section, key) + ex.what());
  }
}

double RawConfig::number_or(const std::string& section, const std::string& key,
                            double fallback) const {
  return number(section, key).value_or(fallback);
}

std::optional<std::string> RawConfig::word(const std::string& section,
                                           const std::string& key) const {
  const Entry* e = find(section, key);
  if (!e) return std::nullopt;
  return e->text;
}

std::optional<bool> RawConfig::boolean(const std::string& section,
                                       const std::string& key) const {
  const Entry* e = find(section, key);
  if (!e) return std::nullopt;
  if (e->text == "true" || e->text == "1") return true;
  if (e->text == "false" || e->text == "0") return false;
  throw ConfigError(where(*e, section, key) + "expected true or false");
}

std::optional<std::uint64_t> RawConfig::unsigned_integer(const std::string& section,
                                                         const std::string& key) const {
  const Entry* e = find(section, key);
  if (!e) return std::nullopt;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(e->text.data(), e->text.data() + e->text.size(), value);
  if (ec != std::errc() || ptr != e->text.data() + e->text.size()) {
    throw ConfigError(where(*e, section, key) + "expected an unsigned integer");
  }
  return value;
}

std::optional<std::vector<double>> RawConfig::numbers(const std::string& section,
                                                      const std::string& key) const {
  const Entry* e = find(section, key);
  if (!e) return std::nullopt;
  std::string body = e->text;
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw ConfigError(where(*e, section, key) + "expected an array [a, b, ...]");
  }
  body = body.substr(1, body.size() - 2);
  std::vector<double> values;
  std::istringstream items(body);
  std::string item;
  try {
    while (std::getline(items, item, ',')) {
      const double v = parse_number(item);
      if (!std::isfinite(v)) throw ConfigError("value is not finite");
      values.push_back(v);
    }
  } catch (const ConfigError& ex) {
    throw ConfigError(where(*e, section, key) + ex.what());
  }
  if (values.empty()) throw ConfigError(where(*e, section, key) + "array must not be empty");
  return values;
}

std::optional<ComplexMatrix> RawConfig::matrix(const std::string& section,
                                               const std::string& key) const {
  const Entry* e = find(section, key);
  if (!e) return std::nullopt;
  try {
    return matrix_from_json(parse_json_value(*e, section, key));
  } catch (const ConfigError& ex) {
    throw ConfigError(where(*e, section, key) + ex.what());
  }
}

std::optional<std::vector<ComplexMatrix>> RawConfig::matrices(const std::string& section,
                                                              const std::string& key) const {
  const Entry* e = find(section, key);
  if (!e) return std::nullopt;
  const json j = parse_json_value(*e, section, key);
  if (!j.is_array()) throw ConfigError(where(*e, section, key) + "expected a list of matrices");
  std::vector<ComplexMatrix> out;
  try {
    for (const json& m : j) out.push_back(matrix_from_json(m));
  } catch (const ConfigError& ex) {
    throw ConfigError(where(*e, section, key) + ex.what());
  }
  return out;
}

std::optional<ComplexVector> RawConfig::vector(const std::string& section,
                                               const std::string& key) const {
  const Entry* e = find(section, key);
  if (!e) return std::nullopt;
  const json j = parse_json_value(*e, section, key);
  if (!j.is_array() || j.empty()) {
    throw ConfigError(where(*e, section, key) + "expected a non-empty array of amplitudes");
  }
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  try {
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  } catch (const ConfigError& ex) {
    throw ConfigError(where(*e, section, key) + ex.what());
  }
  return v;
}

double ExperimentConfig::parameter(const std::string& name, double fallback) const {
  const auto it = parameters.find(name);
  return it == parameters.end() ? fallback : it->second;
}

ExperimentConfig parse_experiment_config(std::string_view text) {
  ExperimentConfig config;
  config.raw = RawConfig::parse(text);
  const RawConfig& raw = config.raw;

  if (auto preset = raw.word("model", "preset")) config.preset = *preset;
  static const std::set<std::string> presets = {"dephasing", "emission", "rabi", "product",
                                                "custom"};
  if (!presets.contains(config.preset)) {
    throw ConfigError(where(*raw.find("model", "preset"), "model", "preset") +
                      "unknown preset '" + config.preset +
                      "' (expected dephasing, emission, rabi, product or custom)");
  }

  for (const char* key : {"omega", "gamma", "theta", "n", "theta_target"}) {
    if (auto v = raw.number("model", key)) config.parameters[key] = *v;
  }
  if (auto v = raw.boolean("model", "single_site")) config.parameters["single_site"] = *v;
  if (auto v = raw.number("qsl", "theta_target")) config.parameters["theta_target"] = *v;

  config.integrator.dt = raw.number_or("integrator", "dt", config.integrator.dt);
  config.integrator.horizon = raw.number_or("integrator", "horizon", config.integrator.horizon);
  if (!(config.integrator.dt > 0.0) || !(config.integrator.horizon > 0.0)) {
    throw ConfigError("[integrator] dt and horizon must be positive");
  }

  if (raw.has("sweep", "name") != raw.has("sweep", "values")) {
    throw ConfigError("[sweep] needs both 'name' and 'values'");
  }
  if (raw.has("sweep", "name")) {
    SweepAxis axis{*raw.word("sweep", "name"), *raw.numbers("sweep", "values")};
    if (!sweepable().contains(axis.name)) {
      throw ConfigError(where(*raw.find("sweep", "name"), "sweep", "name") +
                        "cannot sweep '" + axis.name +
                        "' (expected omega, gamma, theta, n or theta_target)");
    }
    config.sweep = std::move(axis);
  }

  if (auto path = raw.word("output", "path")) config.output.path = *path;
  if (auto format = raw.word("output", "format")) config.output.format = *format;
  if (config.output.format != "csv" && config.output.format != "json") {
    throw ConfigError(where(*raw.find("output", "format"), "output", "format") +
                      "expected csv or json");
  }

  config.hamiltonian = raw.matrix("model", "hamiltonian");
  if (auto ops = raw.matrices("model", "lindblad")) config.lindblad_ops = std::move(*ops);
  config.psi0 = raw.vector("model", "psi0");
  if (config.preset == "custom") {
    if (!config.hamiltonian || !config.psi0) {
      throw ConfigError("[model] preset = custom requires 'hamiltonian' and 'psi0'");
    }
    // Validate the inline model now so errors point at the config, not at a later run.
    build_preset(config, config.parameters);
  }
  return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_config(buffer.str());
}

Preset build_preset(const ExperimentConfig& config,
                    const std::map<std::string, double>& parameters) {
  const auto get = [&](const char* key, double fallback) {
    const auto it = parameters.find(key);
    return it == parameters.end() ? fallback : it->second;
  };
  try {
    if (config.preset == "dephasing") {
      return dephasing_model({get("omega", 1.0), get("gamma", 1.0),
                              get("theta", std::numbers::pi / 4)});
    }
    if (config.preset == "emission") return spontaneous_emission_model(get("gamma", 1.0));
    if (config.preset == "rabi") return rabi_model(get("omega", 1.0));
    if (config.preset == "product") {
      const double n = get("n", 2.0);
      if (n < 1.0 || n != std::floor(n)) throw ConfigError("n must be a positive integer");
      return product_model_dense({static_cast<std::size_t>(n), get("omega", 1.0),
                                  get("gamma", 1.0), get("theta", std::numbers::pi / 4),
                                  get("single_site", 0.0) != 0.0});
    }
    // custom
    const RawConfig::Entry* h_entry = config.raw.find("model", "hamiltonian");
    try {
      LindbladModel model(*config.hamiltonian, config.lindblad_ops);
      if (config.psi0->size() != static_cast<Eigen::Index>(model.dim())) {
        throw DimensionError("psi0 has dim " + std::to_string(config.psi0->size()) +
                             ", model has dim " + std::to_string(model.dim()));
      }
      return {std::move(model), PureState(*config.psi0)};
    } catch (const Error& ex) {
      const std::string prefix =
          h_entry ? "line " + std::to_string(h_entry->line) + ", [model]: " : "[model]: ";
      throw ConfigError(prefix + "invalid inline model: " + ex.what());
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& ex) {
    throw ConfigError(std::string("[model] invalid parameters: ") + ex.what());
  }
}

}  // namespace lqsl
