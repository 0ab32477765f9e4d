#include "otto/cycle.hpp"

#include <cmath>
#include <string>

#include "otto/error.hpp"

namespace otto {
namespace {

constexpr double kDegenerateMargin = 1e-14;
constexpr double kPuritySlack = 1e-12;

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw RangeError(std::string(name) + " must be positive, got " + std::to_string(value));
    }
}

}  // namespace

std::string_view to_string(OperatingMode mode) noexcept {
    switch (mode) {
        case OperatingMode::Engine:
            return "ENGINE";
        case OperatingMode::Refrigerator:
            return "REFRIGERATOR";
        case OperatingMode::Idle:
            return "IDLE";
    }
    return "IDLE";
}

std::string_view to_string(SeparationFrame frame) noexcept {
    return frame == SeparationFrame::Lab ? "lab" : "proper";
}

void OttoConfig::validate() const {
    require_positive(omega_c, "omega_c");
    require_positive(omega_h, "omega_h");
    if (!(omega_h > omega_c)) {
        throw RangeError("omega_h must exceed omega_c");
    }
    require_positive(radius, "R");
    require_positive(delta_t, "delta_t");
    if (!(temperature_hot > temperature_cold)) {
        throw RangeError("T_h must exceed T_c");
    }
    static_cast<void>(hot_bath());
    static_cast<void>(cold_bath());
    quad.validate();
}

BathSpec OttoConfig::hot_bath() const { return BathSpec::thermal(temperature_hot, speed_hot, coupling_hot); }

BathSpec OttoConfig::cold_bath() const { return BathSpec::thermal(temperature_cold, speed_cold, coupling_cold); }

SmearingSpec OttoConfig::smearing() const { return SmearingSpec::with_radius(radius); }

double proper_separation(double delta_t_lab, double v) {
    const TrajectorySpec traj = TrajectorySpec::from_speed(v);
    require_positive(delta_t_lab, "delta_t");
    return delta_t_lab * traj.tau_dot();
}

double closed_cycle_purity(const ChannelCoeffs& coeffs) {
    const double loop_gain = coeffs.a_coeff * coeffs.hot_decay;
    if (!(loop_gain < 1.0 - kDegenerateMargin)) {
        throw DegenerateCycle("no unique closed cycle: A * hot_decay = " + std::to_string(loop_gain) +
                              " (both couplings vanish?)");
    }
    const double r_c = coeffs.b_coeff / (1.0 - loop_gain);
    if (!(std::abs(r_c) <= 1.0 + kPuritySlack)) {
        throw PurityOutOfRange("closed-cycle purity " + std::to_string(r_c) + " outside [-1, 1]");
    }
    return r_c;
}

CycleLedger cycle_ledger(double r_c, double r_h, double omega_c, double omega_h) {
    const double gap = omega_h - omega_c;
    CycleLedger ledger;
    ledger.w_in = 0.5 * (1.0 - r_c) * gap;
    ledger.q_in = 0.5 * (r_c - r_h) * omega_h;
    ledger.w_out = -0.5 * (1.0 - r_h) * gap;
    ledger.q_out = -0.5 * (r_c - r_h) * omega_c;
    return ledger;
}

double extracted_work_per_gap(double r_c, double hot_decay) noexcept { return 0.5 * r_c * (1.0 - hot_decay); }

double cold_kick_separation(const OttoConfig& config) {
    if (config.separation_frame == SeparationFrame::Lab) {
        return proper_separation(config.delta_t, config.speed_cold);
    }
    return config.delta_t;
}

double hot_field_variance(const OttoConfig& config) {
    return field_variance(TrajectorySpec::from_speed(config.speed_hot), config.smearing(), config.hot_bath(),
                          config.quad);
}

WightmanValues cold_fields(const OttoConfig& config) {
    return wightman_values(TrajectorySpec::from_speed(config.speed_cold), config.smearing(), config.cold_bath(),
                           cold_kick_separation(config), config.quad);
}

HotStroke make_hot_stroke(const OttoConfig& config, double variance) {
    const TrajectorySpec traj = TrajectorySpec::from_speed(config.speed_hot);
    // The kick time is irrelevant on a stationary worldline.
    return {variance, single_kick_decay(KickSpec{config.coupling_hot, traj.tau_dot(), 0.0}, variance)};
}

ColdStroke make_cold_stroke(const OttoConfig& config, const WightmanValues& fields) {
    const TrajectorySpec traj = TrajectorySpec::from_speed(config.speed_cold);
    const KickSpec first{config.coupling_cold, traj.tau_dot(), 0.0};
    const KickSpec second{config.coupling_cold, traj.tau_dot(), fields.delta_tau};
    // The cold kicks happen after compression back to Omega_c.
    return {fields, double_kick_coeffs(first, second, fields, config.omega_c)};
}

HotStroke hot_stroke(const OttoConfig& config) { return make_hot_stroke(config, hot_field_variance(config)); }

ColdStroke cold_stroke(const OttoConfig& config) { return make_cold_stroke(config, cold_fields(config)); }

CycleResult close_cycle(const OttoConfig& config, const HotStroke& hot, const ColdStroke& cold) {
    CycleResult result;
    result.coeffs = cold.coeffs;
    result.coeffs.hot_decay = hot.hot_decay;
    result.r_c = closed_cycle_purity(result.coeffs);
    result.r_h = result.r_c * hot.hot_decay;
    result.ledger = cycle_ledger(result.r_c, result.r_h, config.omega_c, config.omega_h);
    result.work_per_gap = extracted_work_per_gap(result.r_c, hot.hot_decay);
    if (result.work_per_gap > 0.0) {
        result.mode = OperatingMode::Engine;
    } else if (result.work_per_gap < 0.0 && result.ledger.q_out > 0.0) {
        result.mode = OperatingMode::Refrigerator;
    } else {
        result.mode = OperatingMode::Idle;
    }
    return result;
}

CycleResult run_cycle(const OttoConfig& config) {
    config.validate();
    return close_cycle(config, hot_stroke(config), cold_stroke(config));
}

}  // namespace otto
