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

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace lqsl {

using Cell = std::variant<double, std::string>;

/// Column-oriented result of one experiment command.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Command-specific extras copied into the metadata sidecar.
  nlohmann::json extras = nlohmann::json::object();
};

/// 17 significant digits, shortest %g-style form, locale independent.
/// Non-finite values print as nan, inf, -inf.
std::string format_double(double value);

/// Header line plus one line per row, '\n' terminated.
std::string to_csv(const Table& table);

/// {"columns": [...], "rows": [[...], ...], "extras": {...}}
std::string to_json_text(const Table& table);

/// Deterministic JSON serialization: keys in sorted order, two-space indent,
/// floating-point numbers via format_double (non-finite values become null).
std::string dump_json(const nlohmann::json& value);

}  // namespace lqsl
