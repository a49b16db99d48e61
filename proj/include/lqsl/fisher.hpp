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

#include <span>
#include <vector>

#include "lqsl/dynamics.hpp"
#include "lqsl/qsl.hpp"

namespace lqsl {

struct FisherReport {
  double horizon_t = 0.0;
  double fidelity_at_t = 1.0;
  /// 4 (1 - F(t)) / t^2
  double qfi_estimate = 0.0;
  /// (V + sqrt(V^2 + 4E/t))^2
  double qfi_bound = 0.0;
  bool satisfied = true;
  /// t lies inside short_time_window(q).
  bool in_window = true;
};

/// Fidelity-decay estimate of the quantum Fisher information, 4 (1 - F) / t^2.
double qfi_short_time(double fidelity, double t);

/// Upper bound on the Fisher information from the speed limit.
double qfi_bound(const QslQuantities& q, double t);

/// x (x + 2) / (2 (1 + x)) - ln(1 + x), strictly positive for x > 0.
double log_inequality_margin(double x);

/// Largest t treated as short-time: scale / max(V, E, delta_h0, 1).
double short_time_window(const QslQuantities& q, double scale = 0.1);

struct FisherOptions {
  /// Relative slack on the bound comparison.
  double relative_tolerance = 1e-9;
  double window_scale = 0.1;
};

/// Integrates through the increasing grid t_grid and compares the fidelity-based
/// estimate against qfi_bound at every point.
std::vector<FisherReport> verify_fisher_tradeoff(const LindbladModel& model,
                                                 const PureState& psi0,
                                                 std::span<const double> t_grid, double dt,
                                                 const FisherOptions& options = {});

}  // namespace lqsl
