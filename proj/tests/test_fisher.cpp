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

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "lqsl/error.hpp"
#include "lqsl/fisher.hpp"
#include "lqsl/models.hpp"
#include "lqsl/random.hpp"
#include "lqsl/verify.hpp"

namespace lqsl {
namespace {

// Independently evaluated at 50 digits.
constexpr double kMarginAtOne = 0.05685281944005469;
constexpr double kMarginAtTen = 3.0566501817470840;
constexpr double kEmissionBoundAtOne = 14.928203230275509;

TEST(QfiShortTime, Examples) {
  EXPECT_EQ(qfi_short_time(1.0, 0.3), 0.0);
  EXPECT_NEAR(qfi_short_time(0.75, 0.5), 4.0, 1e-15);
  EXPECT_THROW(qfi_short_time(0.5, 0.0), DomainError);
  EXPECT_THROW(qfi_short_time(1.5, 1.0), DomainError);
}

TEST(QfiShortTime, RabiFidelity) {
  const double t = 1e-3;
  const double fidelity = std::pow(std::cos(t / 2), 2);
  EXPECT_NEAR(qfi_short_time(fidelity, t), 1.0, 1e-6);
}

TEST(QfiBound, Examples) {
  EXPECT_NEAR(qfi_bound(QslQuantities::from_terms(0.0, 0.0, 1.0), 1.0), 4.0, 1e-15);
  EXPECT_NEAR(qfi_bound(QslQuantities::from_terms(0.0, 1.0, 1.0), 1.0), kEmissionBoundAtOne,
              1e-13);
  const QslQuantities closed = QslQuantities::from_terms(0.3, 0.0, 0.0);
  EXPECT_NEAR(qfi_bound(closed, 0.2), 16.0 * 0.3 * 0.3, 1e-15);
  EXPECT_THROW(qfi_bound(closed, -1.0), DomainError);
}

TEST(QfiBound, DecreasingInTimeAndAboveVSquared) {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const QslQuantities q = QslQuantities::from_terms(rng.uniform(0.0, 2.0),
                                                      rng.uniform(0.0, 2.0),
                                                      rng.uniform(0.01, 2.0));
    double prev = INFINITY;
    for (double t = 1e-3; t < 10.0; t *= 1.7) {
      const double b = qfi_bound(q, t);
      EXPECT_LT(b, prev);
      EXPECT_GE(b, q.v_coeff * q.v_coeff);
      prev = b;
    }
  }
}

TEST(LogInequality, Examples) {
  EXPECT_NEAR(log_inequality_margin(1.0), kMarginAtOne, 1e-16);
  EXPECT_NEAR(log_inequality_margin(10.0), kMarginAtTen, 1e-15);
  for (double x : {1e-2, 1e-4, 1e-6}) {
    EXPECT_NEAR(log_inequality_margin(x) / (x * x * x / 6.0), 1.0, 2.0 * x);
  }
  EXPECT_THROW(log_inequality_margin(0.0), DomainError);
}

TEST(LogInequality, PositiveOnLogUniformSamples) {
  Rng rng(42);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.log_uniform(1e-6, 1e6);
    EXPECT_GT(log_inequality_margin(x), 0.0) << "x = " << x;
  }
}

TEST(LogInequality, ContinuousAcrossSeriesSwitch) {
  const double below = log_inequality_margin(std::nextafter(0.1, 0.0));
  const double above = log_inequality_margin(0.1);
  EXPECT_NEAR(below / above, 1.0, 1e-12);
}

TEST(ShortTimeWindow, Definition) {
  EXPECT_NEAR(short_time_window(QslQuantities::from_terms(0.1, 0.0, 0.2)), 0.1, 1e-15);
  EXPECT_NEAR(short_time_window(QslQuantities::from_terms(0.0, 10.0, 1.0)),
              0.1 / (10.0 * std::sqrt(2.0)), 1e-15);
}

TEST(FisherTradeoff, ClosedRabi) {
  const Preset p = rabi_model(1.0);
  const std::vector<double> grid = {1e-3, 1e-2};
  const auto reports = verify_fisher_tradeoff(p.model, p.psi0, grid, 1e-5);
  ASSERT_EQ(reports.size(), 2u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.satisfied);
    EXPECT_NEAR(r.qfi_bound, 4.0, 1e-12);
    EXPECT_NEAR(r.fidelity_at_t, std::pow(std::cos(r.horizon_t / 2), 2), 1e-12);
  }
  EXPECT_NEAR(reports[0].qfi_estimate, 1.0, 1e-6);
}

TEST(FisherTradeoff, EmissionEstimateDivergesLikeInverseTime) {
  const Preset p = spontaneous_emission_model(1.0);
  const std::vector<double> grid = {1e-3, 1e-2};
  const auto reports = verify_fisher_tradeoff(p.model, p.psi0, grid, 1e-5);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.satisfied);
    const double expected = 4.0 * (1.0 - std::exp(-r.horizon_t)) / (r.horizon_t * r.horizon_t);
    EXPECT_NEAR(r.qfi_estimate / expected, 1.0, 1e-9);
  }
  // Leading order: estimate ~ 4 gamma_eff / t and bound ~ 4 E / t.
  const auto& r = reports[0];
  EXPECT_NEAR(r.qfi_estimate / r.qfi_bound, 1.0, 0.2);
}

TEST(FisherTradeoff, ZeroGenerator) {
  const LindbladModel m(ComplexMatrix::Zero(2, 2));
  const std::vector<double> grid = {1e-3, 1e-1};
  for (const auto& r : verify_fisher_tradeoff(m, bloch_state(1.0), grid, 1e-3)) {
    EXPECT_EQ(r.qfi_estimate, 0.0);
    EXPECT_TRUE(r.satisfied);
  }
}

TEST(FisherTradeoff, RejectsNonIncreasingGrid) {
  const Preset p = rabi_model(1.0);
  const std::vector<double> grid = {1e-2, 1e-3};
  EXPECT_THROW(verify_fisher_tradeoff(p.model, p.psi0, grid, 1e-4), DomainError);
}

TEST(FisherTradeoff, RandomModels) {
  Rng rng(43);
  RandomModelSpec spec;
  spec.max_dim = 4;
  const std::vector<double> grid = {1e-3, 3e-3, 1e-2, 3e-2, 1e-1};
  for (int i = 0; i < 30; ++i) {
    const Preset p = random_model(rng, spec);
    for (const auto& r : verify_fisher_tradeoff(p.model, p.psi0, grid, 1e-4)) {
      EXPECT_TRUE(r.satisfied) << "model " << i << " t = " << r.horizon_t;
    }
  }
}

TEST(FisherTradeoff, ClosedSystemCalibration) {
  Rng rng(44);
  for (int i = 0; i < 30; ++i) {
    const auto d = static_cast<std::size_t>(rng.uniform_int(2, 6));
    const LindbladModel m(random_hermitian(rng, d, rng.uniform(0.5, 2.0)));
    const PureState psi = random_pure_state(rng, d);
    const double dh = compute_quantities(m, psi).delta_h0;
    const std::vector<double> grid = {1e-3};
    const auto reports = verify_fisher_tradeoff(m, psi, grid, 1e-5);
    EXPECT_NEAR(reports[0].qfi_estimate / (4.0 * dh * dh), 1.0, 1e-3);
  }
}

}  // namespace
}  // namespace lqsl
