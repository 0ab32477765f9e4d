#include "otto/emit.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "otto/error.hpp"

namespace otto {
namespace {

constexpr std::array<std::string_view, 9> kResultColumns{
    "r_c", "r_h", "work_per_gap", "w_in", "q_in", "w_out", "q_out", "mode", "error_flag"};

// Result values in kResultColumns order, excluding mode and error_flag.
std::array<double, 7> numeric_fields(const CycleResult& r) {
    return {r.r_c, r.r_h, r.work_per_gap, r.ledger.w_in, r.ledger.q_in, r.ledger.w_out, r.ledger.q_out};
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    throw ConfigError("unknown output format '" + std::string(name) + "' (csv or json)", 0, "format");
}

std::span<const std::string_view> result_columns() noexcept { return kResultColumns; }

std::vector<Parameter> union_columns(std::span<const SweepSpec> specs) {
    std::vector<Parameter> columns;
    for (const SweepSpec& spec : specs) {
        for (Parameter p : spec.swept()) {
            if (std::find(columns.begin(), columns.end(), p) == columns.end()) {
                columns.push_back(p);
            }
        }
    }
    return columns;
}

std::string format_number(double value) {
    std::array<char, 32> buffer{};
    std::snprintf(buffer.data(), buffer.size(), "%.12g", value);
    return buffer.data();
}

void write_csv(std::ostream& out, std::span<const Parameter> columns, std::span<const ResultRow> rows) {
    bool first = true;
    for (Parameter p : columns) {
        out << (first ? "" : ",") << parameter_name(p);
        first = false;
    }
    for (std::string_view name : kResultColumns) {
        out << (first ? "" : ",") << name;
        first = false;
    }
    out << '\n';

    for (const ResultRow& row : rows) {
        for (Parameter p : columns) {
            out << format_number(get_parameter(row.config, p)) << ',';
        }
        if (row.result) {
            for (double v : numeric_fields(*row.result)) {
                out << format_number(v) << ',';
            }
            out << to_string(row.result->mode) << ',';
        } else {
            out << ",,,,,,,,";
        }
        out << row.error_flag << '\n';
    }
}

void write_json(std::ostream& out, std::span<const Parameter> columns, std::span<const ResultRow> rows) {
    // Numbers go through the 12-digit text form so JSON and CSV agree.
    const auto rounded = [](double v) { return std::strtod(format_number(v).c_str(), nullptr); };
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const ResultRow& row : rows) {
        nlohmann::ordered_json object;
        for (Parameter p : columns) {
            object[std::string(parameter_name(p))] = rounded(get_parameter(row.config, p));
        }
        if (row.result) {
            const auto values = numeric_fields(*row.result);
            for (std::size_t i = 0; i < values.size(); ++i) {
                object[std::string(kResultColumns[i])] = rounded(values[i]);
            }
            object["mode"] = std::string(to_string(row.result->mode));
            object["error_flag"] = nullptr;
        } else {
            for (std::size_t i = 0; i < 8; ++i) {
                object[std::string(kResultColumns[i])] = nullptr;
            }
            object["error_flag"] = row.error_flag;
        }
        array.push_back(std::move(object));
    }
    out << array.dump(1) << '\n';
}

void emit(std::span<const ResultRow> rows, std::span<const Parameter> columns, OutputFormat format,
          const std::filesystem::path& path) {
    if (rows.empty()) {
        throw RangeError("nothing to emit: no rows");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    if (format == OutputFormat::Csv) {
        write_csv(out, columns, rows);
    } else {
        write_json(out, columns, rows);
    }
    out.flush();
    if (!out) {
        throw std::runtime_error("write to " + path.string() + " failed");
    }
}

}  // namespace otto
