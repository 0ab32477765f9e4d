#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "otto/config.hpp"
#include "otto/error.hpp"
#include "otto/presets.hpp"

using namespace otto;

namespace {

int config_error_line(std::string_view text, const std::vector<Override>& overrides = {}) {
    try {
        static_cast<void>(parse_config_text(text, overrides));
    } catch (const ConfigError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_CASE("empty config gives the defaults") {
    const SweepSpec spec = parse_config_text("");
    CHECK(spec.axes.empty());
    CHECK(spec.size() == 1);
    const OttoConfig& c = spec.fixed;
    CHECK(c.radius == 1.0);
    CHECK(c.temperature_hot == 1.0);
    CHECK(c.temperature_cold == 0.01);
    CHECK(c.delta_t == 2.0);
    CHECK(c.omega_h == 2.0);
    CHECK(c.omega_c == 1.0);
    CHECK(c.quad.rel_tol == 1e-9);
    CHECK(c.separation_frame == SeparationFrame::Lab);
}

TEST_CASE("keys, comments and presets") {
    const SweepSpec spec = parse_config_text(R"(
# comment line
T_h = 2.5      # trailing comment
T_c=0
v_h = 0.3
v_c = 0.6
lambda_h = 4
lambda_c = 2
R = 0.5
delta_t = 1.5
omega_h = 3
separation_frame = proper
rel_tol = 1e-10
abs_tol = 1e-15
max_subdivisions = 500
)");
    const OttoConfig& c = spec.fixed;
    CHECK(c.temperature_hot == 2.5);
    CHECK(c.temperature_cold == 0.0);
    CHECK(c.speed_hot == 0.3);
    CHECK(c.speed_cold == 0.6);
    CHECK(c.coupling_hot == 4.0);
    CHECK(c.coupling_cold == 2.0);
    CHECK(c.radius == 0.5);
    CHECK(c.delta_t == 1.5);
    CHECK(c.omega_h == 3.0);
    CHECK(c.separation_frame == SeparationFrame::Proper);
    CHECK(c.quad.rel_tol == 1e-10);
    CHECK(c.quad.abs_tol == 1e-15);
    CHECK(c.quad.max_subdivisions == 500);

    const SweepSpec preset = parse_config_text("coupling_preset = strong");
    CHECK(preset.fixed.coupling_cold == 10.0);
    CHECK(preset.fixed.coupling_hot == 10.0);
    CHECK(parse_config_text("coupling_preset = weak").fixed.coupling_hot == 0.1);
    CHECK(parse_config_text("lambda = 3").fixed.coupling_hot == 3.0);
}

TEST_CASE("errors carry line and key") {
    CHECK(config_error_line("T_h = 1\nbogus = 3\n") == 2);
    CHECK(config_error_line("T_h = 1\n\nT_h = 2\n") == 3);
    CHECK(config_error_line("v_c = fast") == 1);
    CHECK(config_error_line("no equals sign") == 1);
    CHECK(config_error_line("coupling_preset = huge") == 1);
    CHECK(config_error_line("separation_frame = sideways") == 1);
    CHECK(config_error_line("axis1 = v_h linspace 0 1") == 1);
    CHECK(config_error_line("axis1 = speed list 0 1") == 1);
    CHECK(config_error_line("axis2 = v_h list 0 0.5") == 1);
    CHECK(config_error_line("axis1 = lambda list 1 2\naxis2 = lambda_c list 1 2") == 2);
    CHECK(config_error_line("", {{"nope", "1"}}) == 0);
    try {
        static_cast<void>(parse_config_text("\n\nv_h = x"));
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.key() == "v_h");
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(static_cast<void>(parse_override("novalue")), ConfigError);
    CHECK_THROWS_AS(static_cast<void>(parse_config_file("/nonexistent/otto.cfg")), ConfigError);
}

TEST_CASE("out-of-domain values are RangeErrors") {
    CHECK_THROWS_AS(static_cast<void>(parse_config_text("v_c = 1.5")), RangeError);
    CHECK_THROWS_AS(static_cast<void>(parse_config_text("R = 0")), RangeError);
    CHECK_THROWS_AS(static_cast<void>(parse_config_text("T_c = 2")), RangeError);
    CHECK_THROWS_AS(static_cast<void>(parse_config_text("delta_t = -1")), RangeError);
    CHECK_THROWS_AS(static_cast<void>(parse_config_text("rel_tol = 0.01")), RangeError);
    CHECK_THROWS_AS(static_cast<void>(parse_config_text("axis1 = v_h linspace 0 1.0 5")), RangeError);
    CHECK_THROWS_AS(static_cast<void>(parse_config_text("axis1 = lambda list 1 -2")), RangeError);
}

TEST_CASE("axes enumerate row-major") {
    const SweepSpec spec = parse_config_text("axis1 = v_h list 0.1 0.2\naxis2 = delta_t linspace 1 3 3\n");
    REQUIRE(spec.size() == 6);
    CHECK(spec.axes[1].values == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(spec.point(0).speed_hot == 0.1);
    CHECK(spec.point(0).delta_t == 1.0);
    CHECK(spec.point(2).delta_t == 3.0);
    CHECK(spec.point(3).speed_hot == 0.2);
    CHECK(spec.point(3).delta_t == 1.0);
    CHECK(spec.swept() == std::vector<Parameter>{Parameter::SpeedHot, Parameter::DeltaT});

    const SweepSpec lin = parse_config_text("axis1 = v_c linspace 0 0.99 50");
    CHECK(lin.axes[0].values.front() == 0.0);
    CHECK(lin.axes[0].values.back() == 0.99);
    const SweepSpec single = parse_config_text("axis1 = R linspace 2 5 1");
    CHECK(single.axes[0].values == std::vector<double>{2.0});
}

TEST_CASE("overrides") {
    const std::vector<Override> set{parse_override("T_h = 3"), parse_override("v_c=0.2")};
    const SweepSpec spec = parse_config_text("T_h = 1\naxis1 = v_c list 0 0.5", set);
    CHECK(spec.fixed.temperature_hot == 3.0);
    // Overriding a swept parameter pins it.
    CHECK(spec.axes.empty());
    CHECK(spec.fixed.speed_cold == 0.2);

    const std::string fig3(*preset_text("fig3"));
    const SweepSpec medium = parse_config_text(fig3, std::vector<Override>{{"coupling_preset", "medium"}});
    CHECK(medium.size() == 2500);
    CHECK(medium.swept() == std::vector<Parameter>{Parameter::SpeedHot, Parameter::SpeedCold});
    CHECK(medium.fixed.coupling_cold == 3.0);
    CHECK(medium.fixed.coupling_hot == 3.0);

    // Replacing an axis from the command line.
    const SweepSpec replaced = parse_config_text(fig3, std::vector<Override>{{"axis2", "v_h list 0 0.5"}, {"axis3", "v_c list 0.1"}});
    CHECK(replaced.size() == 6);
}

TEST_CASE("presets parse") {
    CHECK(preset_names().size() == 4);
    CHECK(parse_config_text(*preset_text("fig3")).size() == 7500);
    for (std::string_view name : {"fig4_hot", "fig4_cold"}) {
        const SweepSpec s = parse_config_text(*preset_text(name));
        CHECK(s.size() == 50);
        CHECK(s.fixed.coupling_hot == 3.0);
        CHECK(s.fixed.delta_t == 2.0);
    }
    const SweepSpec fig5 = parse_config_text(*preset_text("fig5"));
    CHECK(fig5.fixed.coupling_cold == 10.0);
    CHECK(fig5.axes[0].parameter == Parameter::DeltaT);
    CHECK(fig5.axes[0].values.back() == 10.0);
    CHECK(fig5.axes[0].values.front() > 0.0);
    CHECK_FALSE(preset_text("fig9").has_value());
    CHECK(figure_presets(4).size() == 2);
    CHECK_THROWS_AS(static_cast<void>(figure_presets(2)), RangeError);

    // Shipped files and the compiled-in copies agree.
    for (std::string_view name : preset_names()) {
        std::ifstream in(std::filesystem::path(OTTO_PRESET_DIR) / (std::string(name) + ".cfg"));
        const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(text == *preset_text(name));
    }
}

TEST_CASE("parameter names round-trip") {
    for (std::string_view name : {"v_h", "v_c", "lambda_c", "lambda_h", "lambda", "delta_t", "T_c", "T_h", "R"}) {
        const auto p = parameter_from_name(name);
        REQUIRE(p.has_value());
        CHECK(parameter_name(*p) == name);
        OttoConfig c;
        set_parameter(c, *p, 0.125);
        CHECK(get_parameter(c, *p) == 0.125);
    }
    CHECK_FALSE(parameter_from_name("omega_h").has_value());
}
