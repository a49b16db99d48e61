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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lqsl/linalg.hpp"
#include "lqsl/models.hpp"

namespace lqsl {

/// Sectioned key-value text:
///
///   # comment
///   [model]
///   preset = dephasing
///   theta = pi/4
///   hamiltonian = [[[0, 0], [0.5, 0]],
///                  [[0.5, 0], [0, 0]]]
///
/// Values are numbers (optionally written as a*pi/b), bare words, or JSON arrays;
/// an array value continues over following lines until its brackets balance.
class RawConfig {
 public:
  struct Entry {
    std::string text;
    std::size_t line = 0;
  };
  using Section = std::map<std::string, Entry>;

  static RawConfig parse(std::string_view text);

  bool has(const std::string& section, const std::string& key) const;
  const Entry* find(const std::string& section, const std::string& key) const;
  const std::map<std::string, Section>& sections() const { return sections_; }

  std::optional<double> number(const std::string& section, const std::string& key) const;
  double number_or(const std::string& section, const std::string& key, double fallback) const;
  std::optional<std::string> word(const std::string& section, const std::string& key) const;
  std::optional<bool> boolean(const std::string& section, const std::string& key) const;
  std::optional<std::uint64_t> unsigned_integer(const std::string& section,
                                                const std::string& key) const;
  std::optional<std::vector<double>> numbers(const std::string& section,
                                             const std::string& key) const;
  std::optional<ComplexMatrix> matrix(const std::string& section, const std::string& key) const;
  std::optional<std::vector<ComplexMatrix>> matrices(const std::string& section,
                                                     const std::string& key) const;
  std::optional<ComplexVector> vector(const std::string& section, const std::string& key) const;

 private:
  std::map<std::string, Section> sections_;
};

/// Parses "1.5", "pi", "pi/4", "3*pi/4", "-2.5e-3". Throws ConfigError.
double parse_number(std::string_view text);

struct IntegratorSettings {
  double dt = 1e-4;
  double horizon = 10.0;
};

struct SweepAxis {
  std::string name;
  std::vector<double> values;
};

struct OutputSettings {
  std::string path;
  std::string format = "csv";
};

/// Typed view over a RawConfig.
struct ExperimentConfig {
  /// dephasing | emission | rabi | product | custom
  std::string preset = "emission";
  /// Model and target parameters: omega, gamma, theta, n, single_site, theta_target.
  std::map<std::string, double> parameters;
  std::optional<ComplexMatrix> hamiltonian;
  std::vector<ComplexMatrix> lindblad_ops;
  std::optional<ComplexVector> psi0;
  IntegratorSettings integrator;
  std::optional<SweepAxis> sweep;
  OutputSettings output;
  RawConfig raw;

  double parameter(const std::string& name, double fallback) const;
};

/// Validates sections, keys and the inline model; throws ConfigError naming
/// the offending line and field.
ExperimentConfig parse_experiment_config(std::string_view text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

/// Model and initial state for the given parameters (which may include a sweep
/// override). Throws ConfigError for unknown presets or invalid parameters.
Preset build_preset(const ExperimentConfig& config,
                    const std::map<std::string, double>& parameters);

}  // namespace lqsl
