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

#include <optional>

#include "lqsl/dynamics.hpp"
#include "lqsl/linalg.hpp"

namespace lqsl {

/// Speed-limit ingredients evaluated at the initial state.
struct QslQuantities {
  /// Energy standard deviation sqrt(<H^2> - <H>^2).
  double delta_h0 = 0.0;
  /// Frobenius norm of sum_k D^dagger[L_k] rho0.
  double g_term = 0.0;
  /// sum_k (||L_k psi0||^2 - |<psi0|L_k|psi0>|^2).
  double e_term = 0.0;
  /// 2 delta_h0 + sqrt(2) g_term.
  double v_coeff = 0.0;
  /// v_coeff / e_term, defined iff e_term > 0.
  std::optional<double> ratio_r;

  /// Builds the bundle with v_coeff and ratio_r derived from the three primitives.
  static QslQuantities from_terms(double delta_h0, double g_term, double e_term);
};

/// One target angle: simulated first passage against the speed limit.
struct BoundReport {
  double theta_target = 0.0;
  /// Empty when the target is never reached within the horizon.
  std::optional<double> t_first_passage;
  double t_qsl = 0.0;
  double t_lower = 0.0;
  /// Vacuously true when the target is unreachable.
  bool satisfied = true;
};

/// arccos sqrt(Tr(rho0 rho_t)). rho0 must be pure; throws DomainError otherwise
/// or if the overlap is not a real number in [0, 1].
double bures_angle(const DensityMatrix& rho0, const DensityMatrix& rho_t);

QslQuantities compute_quantities(const LindbladModel& model, const PureState& psi0);

/// Right-hand side of the differential bound:
///   (2 delta_h0 sin(theta) + sqrt(2) G sin(theta) + E) / sin(2 theta).
double theta_dot_bound(const QslQuantities& q, double theta);

/// Integrated speed limit
///   T_QSL = (2/V) (sin(T) - (E/V) ln(1 + (V/E) sin(T))).
/// Evaluated as (2E/V^2)(x - ln(1+x)) with x = V sin(T)/E, using a series for
/// small x, so it is free of cancellation in the strong-decoherence regime.
/// E = 0 gives 2 sin(T)/V and V = 0 gives sin^2(T)/E.
double t_qsl(const QslQuantities& q, double theta_target);

/// sin^2(T) / E, the leading term when E dominates V sin(T).
double t_qsl_strong_decoherence(const QslQuantities& q, double theta_target);

/// f(r, T) = 2 (sin T - ln(1 + r sin T) / r), so that T_QSL = f(V/E, T) / V.
double f_ratio(double r, double theta_target);

/// sin^2(T) / (E + V sin T); never exceeds t_qsl.
double qsl_lower_bound(const QslQuantities& q, double theta_target);

/// Integrates to `horizon`, extracts the first passage and compares it against
/// t_qsl. `tolerance` is the slack allowed in the satisfied flag.
BoundReport evaluate_bound(const LindbladModel& model, const PureState& psi0,
                           double theta_target, double horizon, double dt,
                           double tolerance = 1e-9);

/// x - ln(1 + x) for x >= 0, accurate to full relative precision.
double x_minus_log1p(double x);

}  // namespace lqsl
