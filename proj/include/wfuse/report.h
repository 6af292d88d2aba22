// Copyright 2026 The wfuse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WFUSE_REPORT_H
#define WFUSE_REPORT_H

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace wfuse {

inline constexpr const char *kSchemaVersion = "wfuse/1";

/// Significant digits for numbers in JSON and CSV output.
inline constexpr int kMachineDigits = 12;
/// Decimals for numbers in text output.
inline constexpr int kTextDecimals = 4;

/// A table cell. Null renders as JSON null, an empty CSV field and "-" in text.
using Cell = std::variant<std::monostate, bool, int64_t, double, std::string>;

/// Columns whose name contains '.' become nested objects in JSON ("sol1.nu" -> {"sol1": {"nu": ...}}).
struct ReportTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, Cell>> inputs;
    std::vector<ReportTable> tables;
    std::vector<std::string> notes;
    int exit_status = 0;

    ReportTable &table(const std::string &name, std::vector<std::string> columns);
};

enum class OutputFormat { Text, Json, Csv };

std::string render(const RunReport &report, OutputFormat format);

/// Rounds to kMachineDigits significant digits, as printed in JSON and CSV.
double round_significant(double x);

}  // namespace wfuse

#endif
