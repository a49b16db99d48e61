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

#include <stdexcept>
#include <string>

namespace lqsl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands with incompatible dimensions (caller bug).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's domain: non-Hermitian, unnormalized, bad angle.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Result would exceed a configured size cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Trace drift or positivity loss beyond tolerance during integration.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at Theta = 0 or Theta = pi/2 where sin(2 Theta) vanishes.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

/// Target angle not reached within the trajectory horizon.
class UnreachableError : public Error {
 public:
  using Error::Error;
};

/// Both the speed coefficient and the fluctuation term vanish.
class FrozenDynamicsError : public Error {
 public:
  using Error::Error;
};

/// Malformed experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace lqsl
