#include "otto/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "otto/error.hpp"

namespace otto {
namespace {

constexpr std::array<std::pair<Parameter, std::string_view>, 9> kParameterNames{{
    {Parameter::SpeedHot, "v_h"},
    {Parameter::SpeedCold, "v_c"},
    {Parameter::CouplingCold, "lambda_c"},
    {Parameter::CouplingHot, "lambda_h"},
    {Parameter::Coupling, "lambda"},
    {Parameter::DeltaT, "delta_t"},
    {Parameter::TempCold, "T_c"},
    {Parameter::TempHot, "T_h"},
    {Parameter::Radius, "R"},
}};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
    std::vector<std::string_view> words;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto start = s.find_first_not_of(" \t", pos);
        if (start == std::string_view::npos) {
            break;
        }
        const auto end = s.find_first_of(" \t", start);
        words.push_back(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
        pos = end == std::string_view::npos ? s.size() : end;
    }
    return words;
}

// Where a setting came from, for diagnostics. Line 0 means a command-line
// override.
struct Origin {
    int line = 0;
    std::string key;

    [[noreturn]] void fail(const std::string& what) const {
        const std::string where = line > 0 ? "line " + std::to_string(line) + ": " : "override: ";
        throw ConfigError(where + key + ": " + what, line, key);
    }
};

double parse_number(std::string_view text, const Origin& origin) {
    text = trim(text);
    double value = 0.0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        origin.fail("expected a number, got '" + std::string(text) + "'");
    }
    return value;
}

int parse_count(std::string_view text, const Origin& origin) {
    text = trim(text);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        origin.fail("expected an integer, got '" + std::string(text) + "'");
    }
    return value;
}

Axis parse_axis(std::string_view text, const Origin& origin) {
    const auto words = split_words(text);
    if (words.size() < 3) {
        origin.fail("expected '<name> linspace <a> <b> <n>' or '<name> list <v>...'");
    }
    const auto parameter = parameter_from_name(words[0]);
    if (!parameter) {
        origin.fail("unknown sweep parameter '" + std::string(words[0]) + "'");
    }
    Axis axis;
    axis.parameter = *parameter;
    if (words[1] == "linspace") {
        if (words.size() != 5) {
            origin.fail("linspace takes exactly <a> <b> <n>");
        }
        const double a = parse_number(words[2], origin);
        const double b = parse_number(words[3], origin);
        const int n = parse_count(words[4], origin);
        if (n < 1) {
            origin.fail("linspace needs at least one point");
        }
        axis.values.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            axis.values[static_cast<std::size_t>(i)] = n == 1 ? a : a + (b - a) * i / (n - 1);
        }
        if (n > 1) {
            axis.values.back() = b;
        }
    } else if (words[1] == "list") {
        for (std::size_t i = 2; i < words.size(); ++i) {
            axis.values.push_back(parse_number(words[i], origin));
        }
    } else {
        origin.fail("unknown axis kind '" + std::string(words[1]) + "'");
    }
    return axis;
}

// Parameters that write the same config field.
bool overlaps(Parameter a, Parameter b) {
    if (a == b) {
        return true;
    }
    const auto coupling_pair = [](Parameter x, Parameter y) {
        return x == Parameter::Coupling && (y == Parameter::CouplingCold || y == Parameter::CouplingHot);
    };
    return coupling_pair(a, b) || coupling_pair(b, a);
}

class Builder {
public:
    void apply(std::string_view key, std::string_view value, const Origin& origin) {
        if (key.size() == 5 && key.substr(0, 4) == "axis" && key[4] >= '1' && key[4] <= '3') {
            axes_[static_cast<std::size_t>(key[4] - '1')] = parse_axis(value, origin);
            return;
        }
        if (const auto p = parameter_from_name(key)) {
            set_parameter(config_, *p, parse_number(value, origin));
            pin(*p);
            return;
        }
        if (key == "coupling_preset") {
            const auto coupling = coupling_preset(trim(value));
            if (!coupling) {
                origin.fail("expected weak, medium or strong, got '" + std::string(value) + "'");
            }
            set_parameter(config_, Parameter::Coupling, *coupling);
            pin(Parameter::Coupling);
        } else if (key == "omega_c") {
            config_.omega_c = parse_number(value, origin);
        } else if (key == "omega_h") {
            config_.omega_h = parse_number(value, origin);
        } else if (key == "separation_frame") {
            const auto word = trim(value);
            if (word == "lab") {
                config_.separation_frame = SeparationFrame::Lab;
            } else if (word == "proper") {
                config_.separation_frame = SeparationFrame::Proper;
            } else {
                origin.fail("expected lab or proper, got '" + std::string(word) + "'");
            }
        } else if (key == "rel_tol") {
            config_.quad.rel_tol = parse_number(value, origin);
        } else if (key == "abs_tol") {
            config_.quad.abs_tol = parse_number(value, origin);
        } else if (key == "max_subdivisions") {
            config_.quad.max_subdivisions = parse_count(value, origin);
        } else {
            origin.fail("unknown key");
        }
    }

    // File axes must be numbered from 1 without gaps. Called once, before
    // any override is applied.
    void seal_axes(const std::vector<Origin>& axis_origins) {
        bool gap = false;
        for (std::size_t i = 0; i < axes_.size(); ++i) {
            if (!axes_[i]) {
                gap = true;
                continue;
            }
            if (gap) {
                axis_origins[i].fail("axis" + std::to_string(i + 1) + " given without axis" + std::to_string(i));
            }
        }
        sealed_ = true;
    }

    SweepSpec finish(const std::vector<Origin>& axis_origins) {
        SweepSpec spec;
        spec.fixed = config_;
        for (std::size_t i = 0; i < axes_.size(); ++i) {
            if (!axes_[i]) {
                continue;
            }
            for (const Axis& earlier : spec.axes) {
                if (overlaps(earlier.parameter, axes_[i]->parameter)) {
                    axis_origins[i].fail("parameter '" + std::string(parameter_name(axes_[i]->parameter)) +
                                         "' is already swept");
                }
            }
            spec.axes.push_back(*axes_[i]);
        }
        return spec;
    }

private:
    // An explicit value given after the file is sealed wins over any axis
    // writing the same field.
    void pin(Parameter p) {
        if (!sealed_) {
            return;
        }
        for (auto& axis : axes_) {
            if (axis && overlaps(axis->parameter, p)) {
                axis.reset();
            }
        }
    }

    OttoConfig config_;
    std::array<std::optional<Axis>, SweepSpec::kMaxAxes> axes_;
    bool sealed_ = false;
};

}  // namespace

std::string_view parameter_name(Parameter p) noexcept {
    for (const auto& [param, name] : kParameterNames) {
        if (param == p) {
            return name;
        }
    }
    return "?";
}

std::optional<Parameter> parameter_from_name(std::string_view name) noexcept {
    for (const auto& [param, known] : kParameterNames) {
        if (known == name) {
            return param;
        }
    }
    return std::nullopt;
}

double get_parameter(const OttoConfig& config, Parameter p) noexcept {
    switch (p) {
        case Parameter::SpeedHot:
            return config.speed_hot;
        case Parameter::SpeedCold:
            return config.speed_cold;
        case Parameter::CouplingCold:
        case Parameter::Coupling:
            return config.coupling_cold;
        case Parameter::CouplingHot:
            return config.coupling_hot;
        case Parameter::DeltaT:
            return config.delta_t;
        case Parameter::TempCold:
            return config.temperature_cold;
        case Parameter::TempHot:
            return config.temperature_hot;
        case Parameter::Radius:
            return config.radius;
    }
    return 0.0;
}

void set_parameter(OttoConfig& config, Parameter p, double value) noexcept {
    switch (p) {
        case Parameter::SpeedHot:
            config.speed_hot = value;
            break;
        case Parameter::SpeedCold:
            config.speed_cold = value;
            break;
        case Parameter::CouplingCold:
            config.coupling_cold = value;
            break;
        case Parameter::CouplingHot:
            config.coupling_hot = value;
            break;
        case Parameter::Coupling:
            config.coupling_cold = value;
            config.coupling_hot = value;
            break;
        case Parameter::DeltaT:
            config.delta_t = value;
            break;
        case Parameter::TempCold:
            config.temperature_cold = value;
            break;
        case Parameter::TempHot:
            config.temperature_hot = value;
            break;
        case Parameter::Radius:
            config.radius = value;
            break;
    }
}

std::size_t SweepSpec::size() const noexcept {
    std::size_t n = 1;
    for (const Axis& axis : axes) {
        n *= axis.values.size();
    }
    return n;
}

OttoConfig SweepSpec::point(std::size_t index) const {
    OttoConfig config = fixed;
    for (std::size_t i = axes.size(); i-- > 0;) {
        const std::size_t n = axes[i].values.size();
        set_parameter(config, axes[i].parameter, axes[i].values[index % n]);
        index /= n;
    }
    return config;
}

std::vector<Parameter> SweepSpec::swept() const {
    std::vector<Parameter> out;
    for (const Axis& axis : axes) {
        out.push_back(axis.parameter);
    }
    return out;
}

void SweepSpec::validate() const {
    if (axes.size() > kMaxAxes) {
        throw RangeError("at most " + std::to_string(kMaxAxes) + " sweep axes");
    }
    fixed.validate();
    for (const Axis& axis : axes) {
        if (axis.values.empty()) {
            throw RangeError(std::string("axis ") + std::string(parameter_name(axis.parameter)) + " has no points");
        }
        for (double value : axis.values) {
            OttoConfig probe = fixed;
            set_parameter(probe, axis.parameter, value);
            probe.validate();
        }
    }
}

Override parse_override(std::string_view text) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
        throw ConfigError("override '" + std::string(text) + "' is not key=value", 0, std::string(text));
    }
    return {std::string(trim(text.substr(0, eq))), std::string(trim(text.substr(eq + 1)))};
}

SweepSpec parse_config_text(std::string_view text, std::span<const Override> overrides) {
    Builder builder;
    std::vector<Origin> axis_origins(SweepSpec::kMaxAxes);
    std::vector<std::string> seen;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value", line_no, std::string(line));
        }
        const std::string key(trim(line.substr(0, eq)));
        const Origin origin{line_no, key};
        if (key.empty()) {
            origin.fail("empty key");
        }
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
            origin.fail("duplicate key");
        }
        seen.push_back(key);
        if (key.size() == 5 && key.starts_with("axis") && key[4] >= '1' && key[4] <= '3') {
            axis_origins[static_cast<std::size_t>(key[4] - '1')] = origin;
        }
        builder.apply(key, trim(line.substr(eq + 1)), origin);
    }
    builder.seal_axes(axis_origins);

    for (const Override& o : overrides) {
        const Origin origin{0, o.key};
        builder.apply(o.key, o.value, origin);
        if (o.key.size() == 5 && o.key.starts_with("axis") && o.key[4] >= '1' && o.key[4] <= '3') {
            axis_origins[static_cast<std::size_t>(o.key[4] - '1')] = origin;
        }
    }

    SweepSpec spec = builder.finish(axis_origins);
    spec.validate();
    return spec;
}

SweepSpec parse_config_file(const std::filesystem::path& path, std::span<const Override> overrides) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file " + path.string(), 0, "");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), overrides);
}

std::optional<double> coupling_preset(std::string_view name) noexcept {
    if (name == "weak") {
        return 0.1;
    }
    if (name == "medium") {
        return 3.0;
    }
    if (name == "strong") {
        return 10.0;
    }
    return std::nullopt;
}

}  // namespace otto
