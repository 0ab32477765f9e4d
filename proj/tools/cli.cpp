#include "cli.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "otto/config.hpp"
#include "otto/cycle.hpp"
#include "otto/emit.hpp"
#include "otto/error.hpp"
#include "otto/presets.hpp"
#include "otto/selftest.hpp"
#include "otto/sweep.hpp"

namespace otto {
namespace {

enum ExitCode { kOk = 0, kInputError = 1, kNumericError = 2, kSelftestFailed = 3, kIoError = 4 };

struct Options {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    int workers = 0;  // 0: OTTO_WORKERS or hardware threads
    double tol = 0.0;  // 0: keep the configured rel_tol
    std::vector<std::string> sets;
    int figure = 0;
};

std::vector<Override> collect_overrides(const Options& opt) {
    std::vector<Override> overrides;
    for (const std::string& s : opt.sets) {
        overrides.push_back(parse_override(s));
    }
    if (opt.tol > 0.0) {
        overrides.push_back({"rel_tol", format_number(opt.tol)});
    }
    return overrides;
}

SweepSpec load(const Options& opt, const std::vector<Override>& overrides) {
    if (opt.config_path.empty()) {
        return parse_config_text("", overrides);
    }
    return parse_config_file(opt.config_path, overrides);
}

int workers_of(const Options& opt) { return opt.workers > 0 ? opt.workers : default_workers(); }

void print_cycle(std::ostream& out, const OttoConfig& c, const CycleResult& r) {
    out << "mode          " << to_string(r.mode) << '\n'
        << "r_c           " << format_number(r.r_c) << '\n'
        << "r_h           " << format_number(r.r_h) << '\n'
        << "work_per_gap  " << format_number(r.work_per_gap) << '\n'
        << "w_in          " << format_number(r.ledger.w_in) << '\n'
        << "q_in          " << format_number(r.ledger.q_in) << '\n'
        << "w_out         " << format_number(r.ledger.w_out) << '\n'
        << "q_out         " << format_number(r.ledger.q_out) << '\n'
        << "A             " << format_number(r.coeffs.a_coeff) << '\n'
        << "B             " << format_number(r.coeffs.b_coeff) << '\n'
        << "hot_decay     " << format_number(r.coeffs.hot_decay) << '\n'
        << "delta_tau     " << format_number(cold_kick_separation(c)) << '\n';
}

int run_cycle_command(const Options& opt, std::ostream& out) {
    const SweepSpec spec = load(opt, collect_overrides(opt));
    if (!spec.axes.empty()) {
        throw ConfigError("cycle runs a single point; the config defines sweep axes", 0, "axis1");
    }
    print_cycle(out, spec.fixed, run_cycle(spec.fixed));
    return kOk;
}

void write_rows(const Options& opt, const std::vector<SweepSpec>& specs, const std::string& default_out,
                std::ostream& out) {
    const OutputFormat format = parse_format(opt.format);
    std::vector<ResultRow> rows;
    for (const SweepSpec& spec : specs) {
        auto part = sweep(spec, workers_of(opt));
        rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    const std::string path = opt.out_path.empty() ? default_out : opt.out_path;
    emit(rows, union_columns(specs), format, path);

    std::size_t failed = 0;
    for (const ResultRow& row : rows) {
        failed += row.result ? 0 : 1;
    }
    out << "wrote " << rows.size() << " rows to " << path;
    if (failed > 0) {
        out << " (" << failed << " with error_flag)";
    }
    out << '\n';
}

int run_sweep_command(const Options& opt, std::ostream& out) {
    if (opt.config_path.empty()) {
        throw ConfigError("sweep needs --config", 0, "config");
    }
    write_rows(opt, {load(opt, collect_overrides(opt))}, "sweep." + opt.format, out);
    return kOk;
}

int run_figure_command(const Options& opt, std::ostream& out) {
    auto names = figure_presets(opt.figure);
    std::vector<Override> overrides = collect_overrides(opt);
    // Figure 4 has two scans; scan=hot|cold keeps one of them.
    for (auto it = overrides.begin(); it != overrides.end();) {
        if (it->key != "scan") {
            ++it;
            continue;
        }
        if (opt.figure != 4 || (it->value != "hot" && it->value != "cold" && it->value != "both")) {
            throw ConfigError("scan=hot|cold|both applies to figure 4 only", 0, "scan");
        }
        if (it->value != "both") {
            names = {it->value == "hot" ? "fig4_hot" : "fig4_cold"};
        }
        it = overrides.erase(it);
    }
    std::vector<SweepSpec> specs;
    for (std::string_view name : names) {
        specs.push_back(parse_config_text(*preset_text(name), overrides));
    }
    write_rows(opt, specs, "fig" + std::to_string(opt.figure) + "." + opt.format, out);
    return kOk;
}

int run_selftest_command(const Options& opt, std::ostream& out) {
    const SelftestReport report = run_selftest(workers_of(opt));
    for (const SelftestCheck& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    return report.passed() ? kOk : kSelftestFailed;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Relativistic quantum Otto engine simulator", "otto"};
    app.require_subcommand(1);
    Options opt;

    const auto add_common = [&opt](CLI::App* sub) {
        sub->add_option("--config", opt.config_path, "Run configuration (key = value file)");
        sub->add_option("--set", opt.sets, "Override a config key, key=value (repeatable)");
        sub->add_option("--tol", opt.tol, "Relative quadrature tolerance");
    };
    const auto add_output = [&opt](CLI::App* sub) {
        sub->add_option("--out", opt.out_path, "Output file");
        sub->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--workers", opt.workers, "Worker threads (default: $OTTO_WORKERS or all cores)")
            ->check(CLI::PositiveNumber);
    };

    auto* cycle = app.add_subcommand("cycle", "Run one closed cycle and print the result");
    add_common(cycle);
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter grid and write it to a file");
    add_common(sweep_cmd);
    add_output(sweep_cmd);
    auto* figure = app.add_subcommand("figure", "Run the shipped preset of figure 3, 4 or 5");
    figure->add_option("figure", opt.figure, "Figure number")->required()->check(CLI::IsMember({3, 4, 5}));
    add_common(figure);
    add_output(figure);
    auto* selftest = app.add_subcommand("selftest", "Run the built-in oracle and invariant checks");
    selftest->add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (cycle->parsed()) {
            return run_cycle_command(opt, out);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep_command(opt, out);
        }
        if (figure->parsed()) {
            return run_figure_command(opt, out);
        }
        return run_selftest_command(opt, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kInputError;
    } catch (const RangeError& e) {
        err << e.kind() << ": " << e.what() << '\n';
        return kInputError;
    } catch (const NumericError& e) {
        err << e.kind() << ": " << e.what() << '\n';
        return kNumericError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
}

}  // namespace otto
