#pragma once

#include "otto/quadrature.hpp"

// Thermal smeared-field correlators for a Gaussian-smeared detector moving
// inertially through a massless scalar bath. All quantities are in units of
// the cold gap (Omega_c = 1).
//
// The trajectory is stationary, so the variance is the same at every kick
// time: <phi_f(tau1)^2> = <phi_f(tau2)^2>. No time argument appears in the
// API for that reason.

namespace otto {

/// Speeds above this are rejected; the (1 - v) erf argument collapses as v -> 1.
inline constexpr double kMaxSpeed = 0.99;
/// Below this speed the integrals switch to their small-v expansion.
inline constexpr double kSmallSpeedThreshold = 1e-3;

/// Inertial worldline x(tau) = gamma tau (1, v).
class TrajectorySpec {
public:
    /// Throws InvalidSpeed unless 0 <= v <= kMaxSpeed.
    static TrajectorySpec from_speed(double v);

    [[nodiscard]] double speed() const noexcept { return v_; }
    [[nodiscard]] double gamma() const noexcept { return gamma_; }
    /// dtau/dt = 1/gamma.
    [[nodiscard]] double tau_dot() const noexcept { return tau_dot_; }

private:
    TrajectorySpec(double v, double gamma, double tau_dot) : v_(v), gamma_(gamma), tau_dot_(tau_dot) {}
    double v_;
    double gamma_;
    double tau_dot_;
};

/// Gaussian smearing f(xi) = exp(-4|xi|^2 / (pi R^2)) / (pi R / 2)^3 with
/// effective radius R.
class SmearingSpec {
public:
    /// Throws RangeError unless R > 0.
    static SmearingSpec with_radius(double radius);
    [[nodiscard]] double radius() const noexcept { return radius_; }

private:
    explicit SmearingSpec(double radius) : radius_(radius) {}
    double radius_;
};

/// One heat bath as seen by one isochoric stroke.
class BathSpec {
public:
    /// temperature == 0 is the vacuum (beta -> infinity).
    /// Throws RangeError on negative temperature or coupling, InvalidSpeed on
    /// an out-of-range speed.
    static BathSpec thermal(double temperature, double speed, double coupling);

    [[nodiscard]] double temperature() const noexcept { return temperature_; }
    [[nodiscard]] double beta() const noexcept { return beta_; }
    [[nodiscard]] bool is_vacuum() const noexcept { return temperature_ == 0.0; }
    [[nodiscard]] double speed() const noexcept { return speed_; }
    [[nodiscard]] double coupling() const noexcept { return coupling_; }

private:
    BathSpec(double temperature, double beta, double speed, double coupling)
        : temperature_(temperature), beta_(beta), speed_(speed), coupling_(coupling) {}
    double temperature_;
    double beta_;
    double speed_;
    double coupling_;
};

struct WightmanValues {
    double variance = 0.0;  // <phi_f^2>_beta
    double re_w = 0.0;
    double im_w = 0.0;
    double delta_tau = 0.0;
};

/// <phi_f^2>_beta. Strictly positive.
[[nodiscard]] double field_variance(const TrajectorySpec& traj, const SmearingSpec& smear,
                                    const BathSpec& bath, const QuadratureConfig& quad);

/// Re <phi_f(tau1) phi_f(tau2)>_beta at proper separation delta_tau = tau2 - tau1.
[[nodiscard]] double wightman_re(const TrajectorySpec& traj, const SmearingSpec& smear,
                                 const BathSpec& bath, double delta_tau,
                                 const QuadratureConfig& quad);

/// Im <phi_f(tau1) phi_f(tau2)>. Half the field commutator, so it carries no
/// temperature dependence. Exactly zero at delta_tau = 0.
[[nodiscard]] double wightman_im(const TrajectorySpec& traj, const SmearingSpec& smear,
                                 double delta_tau, const QuadratureConfig& quad);

/// All three quantities for one bath and separation.
[[nodiscard]] WightmanValues wightman_values(const TrajectorySpec& traj, const SmearingSpec& smear,
                                             const BathSpec& bath, double delta_tau,
                                             const QuadratureConfig& quad);

}  // namespace otto
