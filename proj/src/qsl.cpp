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

#include "lqsl/qsl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "lqsl/error.hpp"

namespace lqsl {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSeriesCutoff = 0.5;

// g(x) = 2 (x - ln(1+x)) / x^2 = sum_k 2 (-x)^k / (k + 2), for 0 <= x < kSeriesCutoff.
double scaled_log_gap_series(double x) {
  double sum = 0.0;
  double power = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double term = 2.0 * power / static_cast<double>(k + 2);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    power *= -x;
  }
  return sum;
}

void require_target(double theta_target, const char* what) {
  if (!(theta_target > 0.0) || theta_target > std::numbers::pi / 2) {
    throw DomainError(std::string(what) + ": target angle " + std::to_string(theta_target) +
                      " outside (0, pi/2]");
  }
}

}  // namespace

QslQuantities QslQuantities::from_terms(double delta_h0, double g_term, double e_term) {
  QslQuantities q;
  q.delta_h0 = delta_h0;
  q.g_term = g_term;
  q.e_term = e_term;
  q.v_coeff = 2.0 * delta_h0 + kSqrt2 * g_term;
  if (e_term > 0.0) q.ratio_r = q.v_coeff / e_term;
  return q;
}

double x_minus_log1p(double x) {
  if (x < 0.0) throw DomainError("x_minus_log1p: negative argument");
  if (x < kSeriesCutoff) return 0.5 * x * x * scaled_log_gap_series(x);
  return x - std::log1p(x);
}

double bures_angle(const DensityMatrix& rho0, const DensityMatrix& rho_t) {
  if (std::abs(rho0.purity() - 1.0) > 1e-9) {
    throw DomainError("bures_angle: reference state is not pure (purity " +
                      std::to_string(rho0.purity()) + ")");
  }
  const cplx overlap = trace_product(rho0.matrix(), rho_t.matrix());
  if (std::abs(overlap.imag()) > 1e-10 || overlap.real() < -1e-12 ||
      overlap.real() > 1.0 + 1e-12) {
    throw DomainError("bures_angle: overlap Tr(rho0 rho_t) outside [0, 1]");
  }
  return angle_from_overlap(overlap.real());
}

QslQuantities compute_quantities(const LindbladModel& model, const PureState& psi0) {
  if (psi0.dim() != model.dim()) {
    throw DimensionError("compute_quantities: state dim " + std::to_string(psi0.dim()) +
                         " != model dim " + std::to_string(model.dim()));
  }
  const ComplexVector& psi = psi0.amplitudes();
  const ComplexVector h_psi = model.hamiltonian() * psi;
  const double mean_h = psi.dot(h_psi).real();
  const double variance_h = std::max(0.0, h_psi.squaredNorm() - mean_h * mean_h);

  const ComplexMatrix rho0 = psi0.projector();
  ComplexMatrix adjoint_sum = ComplexMatrix::Zero(rho0.rows(), rho0.cols());
  double e_term = 0.0;
  for (const auto& l : model.lindblad_ops()) {
    adjoint_sum += adjoint_dissipator(l, rho0);
    const ComplexVector l_psi = l * psi;
    e_term += std::max(0.0, l_psi.squaredNorm() - std::norm(psi.dot(l_psi)));
  }
  return QslQuantities::from_terms(std::sqrt(variance_h), frobenius_norm(adjoint_sum), e_term);
}

double theta_dot_bound(const QslQuantities& q, double theta) {
  if (!(theta > 0.0) || !(theta < std::numbers::pi / 2)) {
    throw SingularPointError("theta_dot_bound: angle " + std::to_string(theta) +
                             " outside (0, pi/2)");
  }
  const double s = std::sin(theta);
  return ((2.0 * q.delta_h0 + kSqrt2 * q.g_term) * s + q.e_term) / std::sin(2.0 * theta);
}

double t_qsl(const QslQuantities& q, double theta_target) {
  require_target(theta_target, "t_qsl");
  const double v = q.v_coeff;
  const double e = q.e_term;
  const double s = std::sin(theta_target);
  if (v <= 0.0 && e <= 0.0) {
    throw FrozenDynamicsError("t_qsl: V = E = 0, no target angle is reachable");
  }
  if (e <= 0.0) return 2.0 * s / v;
  if (v <= 0.0) return s * s / e;

  const double x = v * s / e;
  if (!std::isfinite(x)) return 2.0 * s / v;
  if (x < kSeriesCutoff) return s * s / e * scaled_log_gap_series(x);
  return 2.0 * s / v * (1.0 - std::log1p(x) / x);
}

double t_qsl_strong_decoherence(const QslQuantities& q, double theta_target) {
  if (!(q.e_term > 0.0)) {
    throw DomainError("t_qsl_strong_decoherence: requires E > 0");
  }
  const double s = std::sin(theta_target);
  return s * s / q.e_term;
}

double f_ratio(double r, double theta_target) {
  if (!(r > 0.0)) throw DomainError("f_ratio: r must be positive");
  const double s = std::sin(theta_target);
  const double x = r * s;
  if (x < kSeriesCutoff) return r * s * s * scaled_log_gap_series(x);
  return 2.0 * s * (1.0 - std::log1p(x) / x);
}

double qsl_lower_bound(const QslQuantities& q, double theta_target) {
  const double s = std::sin(theta_target);
  const double denom = q.e_term + q.v_coeff * s;
  if (!(denom > 0.0)) {
    throw FrozenDynamicsError("qsl_lower_bound: E + V sin(theta) vanishes");
  }
  return s * s / denom;
}

BoundReport evaluate_bound(const LindbladModel& model, const PureState& psi0,
                           double theta_target, double horizon, double dt, double tolerance) {
  BoundReport report;
  report.theta_target = theta_target;
  const QslQuantities q = compute_quantities(model, psi0);
  report.t_qsl = t_qsl(q, theta_target);
  report.t_lower = qsl_lower_bound(q, theta_target);

  EvolveOptions options;
  options.stop_angle = theta_target;
  const Trajectory traj = evolve(model, psi0, horizon, dt, options);
  try {
    report.t_first_passage = first_passage_time(traj, theta_target);
  } catch (const UnreachableError&) {
    report.t_first_passage.reset();
  }
  report.satisfied =
      !report.t_first_passage || *report.t_first_passage >= report.t_qsl - tolerance;
  return report;
}

}  // namespace lqsl
