#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "otto/config.hpp"
#include "otto/sweep.hpp"

namespace otto {

enum class OutputFormat { Csv, Json };

/// "csv" or "json"; throws ConfigError otherwise.
[[nodiscard]] OutputFormat parse_format(std::string_view name);

/// Result columns that follow the swept parameters, in output order.
[[nodiscard]] std::span<const std::string_view> result_columns() noexcept;

/// Swept parameters of several specs, in first-seen order. Used when the
/// rows of more than one sweep go into one file.
[[nodiscard]] std::vector<Parameter> union_columns(std::span<const SweepSpec> specs);

/// %.12g, the precision of every number written.
[[nodiscard]] std::string format_number(double value);

/// Header, then one line per row. Parameter columns hold the row's own
/// configuration values; result columns are empty on error rows.
void write_csv(std::ostream& out, std::span<const Parameter> columns, std::span<const ResultRow> rows);

/// Array of objects with the CSV header as keys; absent values are null.
void write_json(std::ostream& out, std::span<const Parameter> columns, std::span<const ResultRow> rows);

/// Writes to `path`, throwing std::runtime_error on I/O failure and RangeError
/// for an empty row set.
void emit(std::span<const ResultRow> rows, std::span<const Parameter> columns, OutputFormat format,
          const std::filesystem::path& path);

}  // namespace otto
