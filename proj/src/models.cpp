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

#include "lqsl/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lqsl/error.hpp"

namespace lqsl {

namespace {

void check_common(double omega, double gamma, double theta) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw DomainError("omega must be a finite nonnegative number");
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw DomainError("gamma must be a finite nonnegative number");
  }
  if (!(theta >= 0.0) || theta > std::numbers::pi) {
    throw DomainError("theta must lie in [0, pi]");
  }
}

}  // namespace

PureState bloch_state(double theta) {
  ComplexVector psi(2);
  psi << std::cos(theta / 2), std::sin(theta / 2);
  return PureState::normalized(std::move(psi));
}

Preset dephasing_model(const DephasingQubitParams& p) {
  check_common(p.omega, p.gamma, p.theta);
  std::vector<ComplexMatrix> ops;
  if (p.gamma > 0.0) ops.push_back(std::sqrt(p.gamma) * pauli::z());
  return {LindbladModel(0.5 * p.omega * pauli::x(), std::move(ops)), bloch_state(p.theta)};
}

Preset spontaneous_emission_model(double gamma) {
  if (!(gamma > 0.0)) throw DomainError("spontaneous_emission_model: gamma must be positive");
  return {LindbladModel(ComplexMatrix::Zero(2, 2), {std::sqrt(gamma) * pauli::lowering()}),
          bloch_state(0.0)};
}

Preset rabi_model(double omega) { return dephasing_model({omega, 0.0, 0.0}); }

double calibrate_emission_rate(double dt, double t_end) {
  const Preset emission = spontaneous_emission_model(1.0);
  const Trajectory traj = evolve(emission.model, emission.psi0, t_end, dt);
  const double fidelity = std::pow(std::cos(traj.bures_angles.back()), 2);
  return -std::log(fidelity) / t_end;
}

double exact_emission_time(double gamma, double theta_target) {
  if (!(gamma > 0.0)) throw DomainError("exact_emission_time: gamma must be positive");
  if (!(theta_target > 0.0) || !(theta_target < std::numbers::pi / 2)) {
    throw DomainError("exact_emission_time: target must lie in (0, pi/2); the time diverges "
                      "at pi/2");
  }
  const double c = std::cos(theta_target);
  return -std::log(c * c) / (kEmissionRateFactor * gamma);
}

Preset product_model_dense(const ProductModelParams& p) {
  check_common(p.omega, p.gamma, p.theta);
  if (p.n == 0) throw DomainError("product_model_dense: n must be positive");
  if (p.n > kMaxDenseSites) {
    throw ResourceError("product_model_dense: n = " + std::to_string(p.n) + " exceeds " +
                        std::to_string(kMaxDenseSites) +
                        " sites; use product_quantities_analytic");
  }
  const std::size_t dim = std::size_t{1} << p.n;
  ComplexMatrix h = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  std::vector<ComplexMatrix> ops;
  const ComplexMatrix sz = pauli::z();
  const ComplexMatrix sx = pauli::x();
  for (std::size_t i = 0; i < p.n; ++i) {
    h += 0.5 * p.omega * embed_site(sz, i, p.n);
    if (p.gamma > 0.0 && (!p.single_site || i == 0)) {
      ops.push_back(std::sqrt(p.gamma) * embed_site(sx, i, p.n));
    }
  }

  const ComplexVector site = bloch_state(p.theta).amplitudes();
  ComplexVector psi = site;
  for (std::size_t i = 1; i < p.n; ++i) psi = kron(psi, site);
  return {LindbladModel(std::move(h), std::move(ops)), PureState::normalized(std::move(psi))};
}

QslQuantities product_quantities_analytic(const ProductModelParams& p) {
  check_common(p.omega, p.gamma, p.theta);
  if (p.n == 0) throw DomainError("product_quantities_analytic: n must be positive");
  const double n = static_cast<double>(p.n);
  const double m = p.single_site ? 1.0 : n;
  const double s = std::sin(p.theta);
  const double c2 = std::pow(std::cos(p.theta), 2);

  // Single site: Var(sigma_z) = sin^2, Var(sigma_x) = cos^2, and
  // A = D^dagger[sqrt(gamma) sigma_x] rho1 = -gamma cos(theta) sigma_z with
  // ||A||_F^2 = 2 gamma^2 cos^2 and Tr(A rho1) = -gamma cos^2.
  const double delta_h0 = 0.5 * p.omega * std::sqrt(n) * std::abs(s);
  const double e_term = m * p.gamma * c2;
  const double g_sq = p.gamma * p.gamma * (2.0 * m * c2 + m * (m - 1.0) * c2 * c2);
  return QslQuantities::from_terms(delta_h0, std::sqrt(g_sq), e_term);
}

double scaling_exponent(std::span<const std::pair<double, double>> samples) {
  if (samples.size() < 3) throw DomainError("scaling_exponent: need at least 3 samples");
  std::vector<double> xs, ys;
  for (const auto& [n, t] : samples) {
    if (!(n > 0.0) || !(t > 0.0)) {
      throw DomainError("scaling_exponent: n and t must be positive");
    }
    xs.push_back(std::log(n));
    ys.push_back(std::log(t));
  }
  std::vector<double> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("scaling_exponent: n values must be distinct");
  }
  const double count = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 0.0)) throw DomainError("scaling_exponent: degenerate abscissae");
  return sxy / sxx;
}

}  // namespace lqsl
