#pragma once

#include <optional>
#include <string>
#include <vector>

#include "otto/config.hpp"
#include "otto/cycle.hpp"

namespace otto {

/// One grid point. Exactly one of `result` and `error_flag` is set; the flag
/// holds the error kind (e.g. "DegenerateCycle").
struct ResultRow {
    OttoConfig config;
    std::optional<CycleResult> result;
    std::string error_flag;
};

/// Runs every grid point of `spec` on `workers` threads. Rows come back in
/// row-major grid order whatever the worker count, and a failing point only
/// marks its own row. Throws RangeError for workers < 1 or an invalid spec.
[[nodiscard]] std::vector<ResultRow> sweep(const SweepSpec& spec, int workers);

/// OTTO_WORKERS if set to a positive integer, otherwise the hardware thread
/// count (at least 1).
[[nodiscard]] int default_workers();

}  // namespace otto
