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

#include "lqsl/fisher.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lqsl/error.hpp"

namespace lqsl {

double qfi_short_time(double fidelity, double t) {
  if (!(t > 0.0)) throw DomainError("qfi_short_time: t must be positive");
  if (fidelity < 0.0 || fidelity > 1.0) {
    throw DomainError("qfi_short_time: fidelity " + std::to_string(fidelity) +
                      " outside [0, 1]");
  }
  return 4.0 * (1.0 - fidelity) / (t * t);
}

double qfi_bound(const QslQuantities& q, double t) {
  if (!(t > 0.0)) throw DomainError("qfi_bound: t must be positive");
  const double v = q.v_coeff;
  const double root = v + std::sqrt(v * v + 4.0 * q.e_term / t);
  return root * root;
}

double log_inequality_margin(double x) {
  if (!(x > 0.0)) throw DomainError("log_inequality_margin: x must be positive");
  // Small x: sum_{k>=3} (-1)^(k+1) (k - 2) x^k / (2k).
  if (x < 0.1) {
    double sum = 0.0;
    double power = x * x * x;
    for (int k = 3; k < 200; ++k) {
      const double term = (k % 2 == 1 ? 1.0 : -1.0) * (k - 2) * power / (2.0 * k);
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
      power *= x;
    }
    return sum;
  }
  return x * (x + 2.0) / (2.0 * (1.0 + x)) - std::log1p(x);
}

double short_time_window(const QslQuantities& q, double scale) {
  return scale / std::max({q.v_coeff, q.e_term, q.delta_h0, 1.0});
}

std::vector<FisherReport> verify_fisher_tradeoff(const LindbladModel& model,
                                                 const PureState& psi0,
                                                 std::span<const double> t_grid, double dt,
                                                 const FisherOptions& options) {
  const QslQuantities q = compute_quantities(model, psi0);
  const double window = short_time_window(q, options.window_scale);
  const ComplexMatrix rho0 = psi0.projector();

  std::vector<FisherReport> reports;
  reports.reserve(t_grid.size());
  ComplexMatrix rho = rho0;
  double t_prev = 0.0;
  for (const double t : t_grid) {
    if (!(t > t_prev)) {
      throw DomainError("verify_fisher_tradeoff: t_grid must be positive and increasing");
    }
    rho = propagate(model, std::move(rho), t - t_prev, dt);
    t_prev = t;

    FisherReport r;
    r.horizon_t = t;
    r.fidelity_at_t = std::clamp(trace_product(rho0, rho).real(), 0.0, 1.0);
    r.qfi_estimate = qfi_short_time(r.fidelity_at_t, t);
    r.qfi_bound = qfi_bound(q, t);
    r.satisfied = r.qfi_estimate <= r.qfi_bound * (1.0 + options.relative_tolerance);
    r.in_window = t <= window;
    reports.push_back(r);
  }
  return reports;
}

}  // namespace lqsl
