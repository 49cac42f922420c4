// Copyright 2026 The Tycoon Simulator Authors.
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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace tycoon::app {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Six significant digits, '.' decimal point.
std::string format_double(double value);
/// Quotes a field when it holds a comma, quote or line break.
std::string csv_escape(std::string_view field);

/// Comment lines (each prefixed "# ") followed by the header and rows.
std::string to_csv(const CsvTable& table, const std::vector<std::string>& comments = {});
/// Writes to_csv(table) to `path`. Throws Error(io_error).
void emit_csv(const CsvTable& table, const std::filesystem::path& path,
              const std::vector<std::string>& comments = {});
/// Inverse of to_csv; comment lines are skipped.
CsvTable parse_csv(std::string_view text);

}  // namespace tycoon::app
