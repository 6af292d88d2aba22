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

#include "wfuse/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wfuse {

namespace {

std::string format_g(double x) {
    if (!std::isfinite(x)) {
        return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", kMachineDigits, x);
    return buf;
}

std::string format_fixed(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", kTextDecimals, x);
    return buf;
}

nlohmann::ordered_json to_json(const Cell &c) {
    return std::visit(
        [](const auto &v) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(v)) {
                    return format_g(v);
                }
                return round_significant(v);
            } else {
                return v;
            }
        },
        c);
}

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        out += ch;
        if (ch == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

std::string to_text(const Cell &c, bool machine) {
    return std::visit(
        [machine](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return machine ? "" : "-";
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                return machine ? format_g(v) : format_fixed(v);
            } else {
                return v;
            }
        },
        c);
}

std::string render_json(const RunReport &r) {
    nlohmann::ordered_json doc;
    doc["schema"] = kSchemaVersion;
    doc["command"] = r.command;
    auto &inputs = doc["inputs"] = nlohmann::ordered_json::object();
    for (const auto &[k, v] : r.inputs) {
        inputs[k] = to_json(v);
    }
    for (const auto &t : r.tables) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto &row : t.rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (size_t i = 0; i < t.columns.size(); i++) {
                const auto &col = t.columns[i];
                auto dot = col.find('.');
                if (dot == std::string::npos) {
                    obj[col] = to_json(row[i]);
                } else {
                    obj[col.substr(0, dot)][col.substr(dot + 1)] = to_json(row[i]);
                }
            }
            rows.push_back(std::move(obj));
        }
        doc[t.name] = std::move(rows);
    }
    doc["notes"] = r.notes;
    doc["exit_status"] = r.exit_status;
    return doc.dump(2) + "\n";
}

std::string render_csv(const RunReport &r) {
    std::ostringstream out;
    bool first = true;
    for (const auto &t : r.tables) {
        if (!first) {
            out << '\n';
        }
        first = false;
        out << "# " << t.name << '\n';
        for (size_t i = 0; i < t.columns.size(); i++) {
            out << (i ? "," : "") << csv_escape(t.columns[i]);
        }
        out << '\n';
        for (const auto &row : t.rows) {
            for (size_t i = 0; i < row.size(); i++) {
                out << (i ? "," : "") << csv_escape(to_text(row[i], true));
            }
            out << '\n';
        }
    }
    return out.str();
}

std::string render_text(const RunReport &r) {
    std::ostringstream out;
    out << "wfuse " << r.command << '\n';
    for (const auto &[k, v] : r.inputs) {
        out << "  " << k << ": " << to_text(v, false) << '\n';
    }
    for (const auto &t : r.tables) {
        out << '\n' << t.name << '\n';
        std::vector<size_t> width(t.columns.size());
        std::vector<std::vector<std::string>> cells;
        for (size_t i = 0; i < t.columns.size(); i++) {
            width[i] = t.columns[i].size();
        }
        for (const auto &row : t.rows) {
            std::vector<std::string> line;
            for (size_t i = 0; i < row.size(); i++) {
                line.push_back(to_text(row[i], false));
                width[i] = std::max(width[i], line.back().size());
            }
            cells.push_back(std::move(line));
        }
        auto emit = [&](const std::vector<std::string> &line) {
            for (size_t i = 0; i < line.size(); i++) {
                out << (i ? "  " : "  ") << line[i] << std::string(width[i] - line[i].size(), ' ');
            }
            out << '\n';
        };
        emit(t.columns);
        for (const auto &line : cells) {
            emit(line);
        }
        if (t.rows.empty()) {
            out << "  (none)\n";
        }
    }
    for (const auto &n : r.notes) {
        out << "\nnote: " << n << '\n';
    }
    return out.str();
}

}  // namespace

void ReportTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("report table " + name + ": row width does not match columns");
    }
    rows.push_back(std::move(row));
}

ReportTable &RunReport::table(const std::string &name, std::vector<std::string> columns) {
    tables.push_back(ReportTable{name, std::move(columns), {}});
    return tables.back();
}

double round_significant(double x) {
    if (!std::isfinite(x) || x == 0) {
        return x;
    }
    return std::stod(format_g(x));
}

std::string render(const RunReport &report, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json:
            return render_json(report);
        case OutputFormat::Csv:
            return render_csv(report);
        case OutputFormat::Text:
            return render_text(report);
    }
    return {};
}

}  // namespace wfuse
