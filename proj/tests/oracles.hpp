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

// Independent reference implementations used only by tests. Everything here is
// written with explicit loops so that it shares no code path with the library.

#include <cmath>
#include <complex>
#include <cstddef>

#include "lqsl/linalg.hpp"

namespace lqsl::oracle {

inline ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index n = a.rows();
  ComplexMatrix out = ComplexMatrix::Zero(n, b.cols());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

inline ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

inline cplx trace(const ComplexMatrix& a) {
  cplx t = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double m = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

/// L rho L^dag - (L^dag L rho + rho L^dag L)/2 by explicit products.
inline ComplexMatrix dissipator(const ComplexMatrix& l, const ComplexMatrix& rho) {
  const ComplexMatrix ld = dagger(l);
  const ComplexMatrix ldl = mul(ld, l);
  return mul(mul(l, rho), ld) - 0.5 * (mul(ldl, rho) + mul(rho, ldl));
}

inline ComplexMatrix adjoint_dissipator(const ComplexMatrix& l, const ComplexMatrix& a) {
  const ComplexMatrix ld = dagger(l);
  const ComplexMatrix ldl = mul(ld, l);
  return mul(mul(ld, a), l) - 0.5 * (mul(ldl, a) + mul(a, ldl));
}

/// Excited-state population of the emission model, p' = -gamma p, by scalar RK4.
inline double emission_population(double gamma, double t_end, double dt) {
  const auto steps = static_cast<std::size_t>(std::llround(t_end / dt));
  const double h = t_end / static_cast<double>(steps);
  double p = 1.0;
  for (std::size_t k = 0; k < steps; ++k) {
    const double k1 = -gamma * p;
    const double k2 = -gamma * (p + 0.5 * h * k1);
    const double k3 = -gamma * (p + 0.5 * h * k2);
    const double k4 = -gamma * (p + h * k3);
    p += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return p;
}

/// Closed-form speed limit, written directly from its definition.
inline double t_qsl_direct(double v, double e, double theta) {
  const double s = std::sin(theta);
  return 2.0 / v * (s - e / v * std::log(1.0 + v / e * s));
}

}  // namespace lqsl::oracle
