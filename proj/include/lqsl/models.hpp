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
#include <span>
#include <utility>

#include "lqsl/dynamics.hpp"
#include "lqsl/qsl.hpp"

namespace lqsl {

/// A generator together with the pure state it starts from.
struct Preset {
  LindbladModel model;
  PureState psi0;
};

/// Qubit driven by H = (omega/2) sigma_x and dephased by L = sqrt(gamma) sigma_z.
struct DephasingQubitParams {
  double omega = 1.0;
  double gamma = 0.0;
  double theta = 0.0;  ///< Bloch polar angle in [0, pi]
};

/// n qubits, H = sum_i (omega/2) sigma_z^(i), L_i = sqrt(gamma) sigma_x^(i).
struct ProductModelParams {
  std::size_t n = 1;
  double omega = 1.0;
  double gamma = 0.0;
  double theta = 0.0;
  /// Only site 0 carries a Lindblad operator.
  bool single_site = false;
};

inline constexpr std::size_t kMaxDenseSites = 12;

/// Ratio gamma_eff / gamma of the excited-population decay rate under
/// L = sqrt(gamma) sigma_-. Pinned by calibrate_emission_rate().
inline constexpr double kEmissionRateFactor = 1.0;

/// cos(theta/2)|0> + sin(theta/2)|1>
PureState bloch_state(double theta);

/// gamma = 0 produces a closed model with no Lindblad operators.
Preset dephasing_model(const DephasingQubitParams& p);

/// H = 0, L = sqrt(gamma) sigma_-, psi0 = |0> (excited).
Preset spontaneous_emission_model(double gamma);

/// Closed qubit, H = (omega/2) sigma_x, psi0 = |0>.
Preset rabi_model(double omega);

/// Measures gamma_eff / gamma for the emission preset by integrating to t_end
/// and inverting the fidelity exp(-gamma_eff t).
double calibrate_emission_rate(double dt = 1e-4, double t_end = 1.0);

/// -ln(cos^2 T) / gamma_eff. Throws DomainError for T outside (0, pi/2).
double exact_emission_time(double gamma, double theta_target);

/// Dense 2^n-dimensional product model. Throws ResourceError for n > kMaxDenseSites.
Preset product_model_dense(const ProductModelParams& p);

/// O(1) evaluation of the product-model quantities for any n:
///   delta_h0^2 = n (omega/2)^2 sin^2 theta
///   E          = m gamma cos^2 theta
///   G^2        = 2 m gamma^2 cos^2 theta + m (m - 1) gamma^2 cos^4 theta
/// with m = n Lindblad sites (m = 1 for single_site).
QslQuantities product_quantities_analytic(const ProductModelParams& p);

/// Least-squares slope of log(t) against log(n). Needs at least three samples
/// with distinct positive n and positive t.
double scaling_exponent(std::span<const std::pair<double, double>> samples);

}  // namespace lqsl
