#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "otto/cycle.hpp"

// Run configuration: a flat `key = value` text format. `#` starts a comment.
//
//   T_h = 1
//   coupling_preset = medium        # weak | medium | strong
//   axis1 = v_h linspace 0 0.99 50
//   axis2 = v_c list 0 0.5 0.9
//
// Command-line overrides use the same `key=value` syntax and are applied
// after the file; overriding a swept parameter pins it to one value.

namespace otto {

/// Parameters that may be swept. Lambda sets both couplings at once.
enum class Parameter { SpeedHot, SpeedCold, CouplingCold, CouplingHot, Coupling, DeltaT, TempCold, TempHot, Radius };

[[nodiscard]] std::string_view parameter_name(Parameter p) noexcept;
[[nodiscard]] std::optional<Parameter> parameter_from_name(std::string_view name) noexcept;

/// Reading Coupling returns coupling_cold.
[[nodiscard]] double get_parameter(const OttoConfig& config, Parameter p) noexcept;
void set_parameter(OttoConfig& config, Parameter p, double value) noexcept;

struct Axis {
    Parameter parameter = Parameter::SpeedHot;
    std::vector<double> values;
};

/// A grid of cycles: up to three axes over a fixed base configuration.
/// Axis 0 is outermost, so points enumerate row-major.
struct SweepSpec {
    std::vector<Axis> axes;
    OttoConfig fixed;

    static constexpr std::size_t kMaxAxes = 3;

    [[nodiscard]] std::size_t size() const noexcept;
    /// Configuration of grid point `index` (row-major).
    [[nodiscard]] OttoConfig point(std::size_t index) const;
    /// Swept parameters in axis order.
    [[nodiscard]] std::vector<Parameter> swept() const;

    /// Checks the base config and every axis value against the parameter
    /// domains. Throws RangeError/InvalidSpeed.
    void validate() const;
};

/// `--set` style override, parsed from "key=value".
struct Override {
    std::string key;
    std::string value;
};
[[nodiscard]] Override parse_override(std::string_view text);

[[nodiscard]] SweepSpec parse_config_text(std::string_view text, std::span<const Override> overrides = {});
/// Throws ConfigError if the file cannot be read.
[[nodiscard]] SweepSpec parse_config_file(const std::filesystem::path& path,
                                          std::span<const Override> overrides = {});

/// Coupling for a named preset: weak 0.1, medium 3, strong 10.
[[nodiscard]] std::optional<double> coupling_preset(std::string_view name) noexcept;

}  // namespace otto
