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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lqsl/models.hpp"
#include "lqsl/random.hpp"

namespace lqsl {

/// Random Lindblad models: dim uniform in [min_dim, max_dim], H Hermitian with
/// ||H||_F uniform in [0, max_h_norm], 1..max_ops operators with ||L||_F uniform
/// in [0, max_l_norm], Haar-like random pure initial state.
struct RandomModelSpec {
  std::size_t min_dim = 2;
  std::size_t max_dim = 6;
  double max_h_norm = 2.0;
  std::size_t min_ops = 1;
  std::size_t max_ops = 3;
  double max_l_norm = 2.0;
};

Preset random_model(Rng& rng, const RandomModelSpec& spec);

/// Characteristic rate 2 ||H||_F + sum_k ||L_k||_F^2 used to pick dt and horizon.
double generator_scale(const LindbladModel& model);

struct VerifyConfig {
  std::uint64_t seed = 0;
  std::size_t workers = 1;

  // Bound dominance and differential dominance on random models.
  std::size_t models = 300;
  RandomModelSpec model_spec{};
  std::vector<double> targets{0.2, 0.5, 0.8, 1.2};
  /// Slack granted to each check. A negative value demands a margin of at least |tolerance|.
  double tolerance = 1e-7;
  /// dt = step_fraction / scale and horizon = horizon_multiple / scale.
  double step_fraction = 0.005;
  double horizon_multiple = 50.0;
  std::size_t differential_points = 50;
  double differential_margin = 0.05;

  // Fisher trade-off.
  std::size_t fisher_models = 100;
  RandomModelSpec fisher_spec{2, 4, 2.0, 1, 3, 2.0};
  std::vector<double> fisher_grid{1e-3, 2e-3, 5e-3, 1e-2, 2e-2, 5e-2, 1e-1};
  double fisher_dt = 1e-4;
  double fisher_tolerance = 1e-9;

  // Algebraic properties.
  std::size_t log_samples = 10000;
  double algebraic_tolerance = 1e-12;
};

/// A single failed check, with everything needed to replay it.
struct Violation {
  std::string property;
  std::size_t index = 0;
  std::uint64_t sub_seed = 0;
  double margin = 0.0;
  std::map<std::string, double> parameters;
  std::optional<Preset> model;
};

struct PropertyResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t passed = 0;
  /// Checks that could not be performed (for example unreachable targets).
  std::size_t skipped = 0;
  /// Smallest observed (bound - value) margin; negative means violated.
  double worst_margin = 0.0;
  double tolerance = 0.0;
  std::vector<Violation> violations;
};

struct VerifyReport {
  std::vector<PropertyResult> properties;
  bool all_passed() const;
};

/// Property names, in report order.
inline constexpr const char* kBoundDominance = "bound_dominance";
inline constexpr const char* kDifferentialDominance = "differential_dominance";
inline constexpr const char* kFisherTradeoff = "fisher_tradeoff";
inline constexpr const char* kLogInequality = "log_inequality";
inline constexpr const char* kLowerBoundOrdering = "lower_bound_ordering";

/// Bound dominance and differential dominance share one trajectory per model.
std::vector<PropertyResult> verify_dominance(const VerifyConfig& config);
PropertyResult verify_fisher(const VerifyConfig& config);
PropertyResult verify_log_inequality(const VerifyConfig& config);
PropertyResult verify_lower_bound_ordering(const VerifyConfig& config);

/// Every suite above, in the order listed.
VerifyReport run_verification(const VerifyConfig& config);

}  // namespace lqsl
