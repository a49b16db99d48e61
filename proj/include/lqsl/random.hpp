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

#include <cstdint>
#include <random>

#include "lqsl/linalg.hpp"

namespace lqsl {

/// Seeded generator whose outputs depend only on the seed: uniforms are built
/// from raw 64-bit draws and normals via Box-Muller, so no distribution
/// implementation details of the standard library leak into results.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// log-uniform in [lo, hi], lo > 0.
  double log_uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  double normal();
  cplx complex_normal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// SplitMix64 finalizer; derives independent sub-seeds from (seed, index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Complex Gaussian entries rescaled to Frobenius norm `norm`.
ComplexMatrix random_matrix(Rng& rng, std::size_t dim, double norm);
/// Hermitian part of a complex Gaussian matrix, rescaled to Frobenius norm `norm`.
ComplexMatrix random_hermitian(Rng& rng, std::size_t dim, double norm);
PureState random_pure_state(Rng& rng, std::size_t dim);
/// Full-rank mixed state A A^dagger / Tr(A A^dagger).
ComplexMatrix random_density(Rng& rng, std::size_t dim);

}  // namespace lqsl
