#pragma once

#include <string_view>

#include "otto/channel.hpp"
#include "otto/quadrature.hpp"
#include "otto/wightman.hpp"

// Four-stroke Otto cycle with a two-level detector as working medium:
//   1. gap Omega_c -> Omega_h (work W_in)
//   2. one kick in the hot bath, r_c -> r_h (heat Q_in)
//   3. gap Omega_h -> Omega_c (work W_out)
//   4. two kicks in the cold bath, r_h -> r_c (heat Q_out)
// Energies are signed as flowing into the detector.

namespace otto {

/// How delta_t is read: lab-frame coordinate time (converted with 1/gamma_c)
/// or detector proper time.
enum class SeparationFrame { Lab, Proper };

enum class OperatingMode { Engine, Refrigerator, Idle };

[[nodiscard]] std::string_view to_string(OperatingMode mode) noexcept;
[[nodiscard]] std::string_view to_string(SeparationFrame frame) noexcept;

/// Full parameter set of one cycle, in units of Omega_c.
struct OttoConfig {
    double omega_c = 1.0;
    double omega_h = 2.0;
    double temperature_hot = 1.0;
    double temperature_cold = 0.01;
    double speed_hot = 0.0;
    double speed_cold = 0.0;
    double coupling_hot = 3.0;
    double coupling_cold = 3.0;
    double radius = 1.0;
    double delta_t = 2.0;  // separation of the two cold kicks
    SeparationFrame separation_frame = SeparationFrame::Lab;
    QuadratureConfig quad;

    /// Throws RangeError / InvalidSpeed on any out-of-domain value.
    void validate() const;

    [[nodiscard]] BathSpec hot_bath() const;
    [[nodiscard]] BathSpec cold_bath() const;
    [[nodiscard]] SmearingSpec smearing() const;
};

struct CycleLedger {
    double w_in = 0.0;
    double q_in = 0.0;
    double w_out = 0.0;
    double q_out = 0.0;

    [[nodiscard]] double total() const noexcept { return w_in + q_in + w_out + q_out; }
};

struct CycleResult {
    double r_c = 0.0;
    double r_h = 0.0;
    CycleLedger ledger;
    double work_per_gap = 0.0;
    OperatingMode mode = OperatingMode::Idle;
    ChannelCoeffs coeffs;
};

/// Hot-stroke data: depends only on (T_h, v_h, lambda_h, R, quad).
struct HotStroke {
    double variance = 0.0;
    double hot_decay = 1.0;
};

/// Cold-stroke data: depends only on (T_c, v_c, lambda_c, R, delta_t, frame,
/// omega_c, quad).
struct ColdStroke {
    WightmanValues fields;
    ChannelCoeffs coeffs;
};

/// delta_t / gamma(v). Throws InvalidSpeed for v outside [0, kMaxSpeed].
[[nodiscard]] double proper_separation(double delta_t_lab, double v);

/// r_c = B / (1 - A hot_decay).
/// Throws DegenerateCycle when A hot_decay >= 1 - 1e-14 and
/// PurityOutOfRange when |r_c| > 1.
[[nodiscard]] double closed_cycle_purity(const ChannelCoeffs& coeffs);

[[nodiscard]] CycleLedger cycle_ledger(double r_c, double r_h, double omega_c, double omega_h);

/// r_c (1 - hot_decay) / 2: extracted work per unit gap change, positive for
/// an engine and bounded by 1/2.
[[nodiscard]] double extracted_work_per_gap(double r_c, double hot_decay) noexcept;

/// Proper separation of the cold kicks under the configured frame.
[[nodiscard]] double cold_kick_separation(const OttoConfig& config);

// The expensive part of each stroke is the field integral, which does not
// depend on the coupling; sweeps cache it and apply the coupling afterwards.

/// Variance of the hot bath along the hot-stroke worldline.
[[nodiscard]] double hot_field_variance(const OttoConfig& config);
/// Variance, Re W and Im W of the cold bath at the cold-kick separation.
[[nodiscard]] WightmanValues cold_fields(const OttoConfig& config);

[[nodiscard]] HotStroke make_hot_stroke(const OttoConfig& config, double variance);
[[nodiscard]] ColdStroke make_cold_stroke(const OttoConfig& config, const WightmanValues& fields);

[[nodiscard]] HotStroke hot_stroke(const OttoConfig& config);
[[nodiscard]] ColdStroke cold_stroke(const OttoConfig& config);

/// Solves the closed cycle from precomputed strokes. run_cycle(c) equals
/// close_cycle(c, hot_stroke(c), cold_stroke(c)).
[[nodiscard]] CycleResult close_cycle(const OttoConfig& config, const HotStroke& hot, const ColdStroke& cold);

[[nodiscard]] CycleResult run_cycle(const OttoConfig& config);

}  // namespace otto
