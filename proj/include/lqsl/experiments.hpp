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
#include <optional>

#include <json.hpp>

#include "lqsl/config.hpp"
#include "lqsl/output.hpp"
#include "lqsl/verify.hpp"

namespace lqsl {

/// Options from the command line that override the config file.
struct RunContext {
  std::size_t workers = 1;
  std::optional<std::uint64_t> seed;
};

/// sweep_value, delta_h0, g_term, e_term, v_coeff, t_qsl, t_lower, status
Table cmd_qsl(const ExperimentConfig& config, const RunContext& ctx = {});

/// gamma, t_qsl_omega_<w> for each omega (default 0.01, 1, 4) on a log grid of gamma.
Table cmd_fig1a(const ExperimentConfig& config, const RunContext& ctx = {});

/// theta_target, t_exa, t_first_passage, t_qsl for the emission preset.
Table cmd_fig1b(const ExperimentConfig& config, const RunContext& ctx = {});

/// n (or gamma), t_qsl from the analytic product fast path, followed by a
/// fitted_exponent record.
Table cmd_scaling(const ExperimentConfig& config, const RunContext& ctx = {});

/// t, fidelity, qfi_estimate, qfi_bound, satisfied, warning
Table cmd_qfi(const ExperimentConfig& config, const RunContext& ctx = {});

/// t, theta, trace_drift, min_eig
Table cmd_evolve(const ExperimentConfig& config, const RunContext& ctx = {});

VerifyConfig verify_config_from(const ExperimentConfig& config, const RunContext& ctx);

nlohmann::json to_json(const VerifyReport& report, const VerifyConfig& config);

/// Version string recorded in metadata.
const char* library_version();

/// Metadata sidecar: config echo, seed, dt, emission-rate calibration, version.
nlohmann::json make_metadata(const std::string& command, const ExperimentConfig& config,
                             const RunContext& ctx, const nlohmann::json& extras);

}  // namespace lqsl
