#include "otto/wightman.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "otto/error.hpp"
#include "otto/specfun.hpp"

namespace otto {
namespace {

constexpr double kPi = std::numbers::pi;

enum class Part { Variance, Real, Imaginary };

// Shared geometry of the three integrals:
//   erf argument      x(k) = scale * k * (1 +/- v),  scale = sqrt(pi/8) gamma R
//   imaginary shift   c    = sqrt(2/pi) delta_tau / R
//   prefactor              = 1 / sqrt(32 pi^4 gamma^2 v^2 R^2)
struct Geometry {
    double v;
    double gamma;
    double radius;
    double scale;
    double shift;
};

Geometry make_geometry(const TrajectorySpec& traj, const SmearingSpec& smear, double delta_tau) {
    const double radius = smear.radius();
    return {traj.speed(), traj.gamma(), radius,
            std::sqrt(kPi / 8.0) * traj.gamma() * radius,
            std::sqrt(2.0 / kPi) * delta_tau / radius};
}

double thermal_factor(double beta, double k) {
    if (std::isinf(beta)) {
        return 1.0;
    }
    return 1.0 / std::tanh(0.5 * beta * k);
}

// Upper cutoff where the surviving erfc(scale k (1 - v)) envelope is
// negligible. The tail beyond it is bounded by
//   2 * weight * coth(beta K / 2) * sqrt(pi) / (2 s) * erfc(s K),  s = scale (1 - v)
// and the cutoff is pushed out until that bound is below abs_tol.
double cutoff(const Geometry& g, double beta, double weight, double abs_tol) {
    const double s = g.scale * (1.0 - g.v);
    double t = 6.5;
    for (int i = 0; i < 40; ++i) {
        const double k_cut = t / s;
        const double bound = 2.0 * weight * thermal_factor(beta, k_cut) * std::sqrt(kPi) / (2.0 * s) *
                             std::erfc(t);
        if (bound < abs_tol) {
            return k_cut;
        }
        t += 0.5;
    }
    return t / s;
}

// Bracket of the erf form, without prefactor and thermal factor:
//   Variance:  erf(x+) - erf(x-)
//   Real:      Re[E(x+) - E(x-)],  E(x) = e^{-c^2} erf(x + ic)
//   Imaginary: Im[E(x-) - E(x+)]
// written through the scaled complement so the large-k tail keeps full
// relative accuracy.
double erf_bracket(const Geometry& g, Part part, double k) {
    const double x_plus = g.scale * k * (1.0 + g.v);
    const double x_minus = g.scale * k * (1.0 - g.v);
    switch (part) {
        case Part::Variance:
            return std::erfc(x_minus) - std::erfc(x_plus);
        case Part::Real:
            return (specfun::erfc_complex_scaled(x_minus, g.shift) -
                    specfun::erfc_complex_scaled(x_plus, g.shift))
                .real();
        case Part::Imaginary:
            return (specfun::erfc_complex_scaled(x_plus, g.shift) -
                    specfun::erfc_complex_scaled(x_minus, g.shift))
                .imag();
    }
    return 0.0;
}

// Small-v form. Expanding the bracket to third order in v cancels the 1/v of
// the prefactor and leaves
//   (k / 4 pi^2) e^{-a^2} e^{-2iac} [1 + v^2 a^2 (2 (a + ic)^2 - 1) / 3],
// a = scale * k, whose real part gives Variance/Real and whose negated
// imaginary part gives Imaginary. The neglected terms are O(v^4).
double small_speed_integrand(const Geometry& g, Part part, double k) {
    const double a = g.scale * k;
    const double c = part == Part::Variance ? 0.0 : g.shift;
    const std::complex<double> z{a, c};
    const std::complex<double> correction = 1.0 + g.v * g.v * a * a * (2.0 * z * z - 1.0) / 3.0;
    const std::complex<double> phase = std::polar(1.0, -2.0 * a * c);
    const std::complex<double> value = k / (4.0 * kPi * kPi) * std::exp(-a * a) * phase * correction;
    return part == Part::Imaginary ? -value.imag() : value.real();
}

double integrate_part(const TrajectorySpec& traj, const SmearingSpec& smear, double beta, Part part,
                      double delta_tau, const QuadratureConfig& quad) {
    quad.validate();
    if (!(delta_tau >= 0.0) || !std::isfinite(delta_tau)) {
        throw RangeError("delta_tau must be finite and nonnegative, got " + std::to_string(delta_tau));
    }
    const Geometry g = make_geometry(traj, smear, delta_tau);
    const bool thermal = part != Part::Imaginary;
    const double used_beta = thermal ? beta : std::numeric_limits<double>::infinity();
    const bool small = g.v < kSmallSpeedThreshold;

    double weight;
    double k_cut;
    if (small) {
        weight = 1.0;
        // k e^{-a^2} envelope: tail ~ e^{-t^2} / (2 scale^2); t = 7 leaves ~1e-22.
        k_cut = 7.0 / g.scale;
    } else {
        weight = 1.0 / std::sqrt(32.0 * std::pow(kPi, 4) * g.gamma * g.gamma * g.v * g.v * g.radius * g.radius);
        k_cut = cutoff(g, used_beta, weight, quad.abs_tol);
    }

    auto integrand = [&](double k) {
        const double bath = thermal ? thermal_factor(used_beta, k) : 1.0;
        if (small) {
            return bath * small_speed_integrand(g, part, k);
        }
        return bath * weight * erf_bracket(g, part, k);
    };

    // Split at the thermal scale 1/beta so the coth(beta k / 2) ~ 2/(beta k)
    // region of a cold bath gets its own panels.
    std::vector<double> breaks;
    if (thermal && std::isfinite(used_beta) && used_beta >= 1.0) {
        breaks.push_back(1.0 / used_beta);
    }
    return integrate_adaptive(integrand, 0.0, k_cut, breaks, quad).value;
}

}  // namespace

TrajectorySpec TrajectorySpec::from_speed(double v) {
    if (!(v >= 0.0 && v <= kMaxSpeed)) {
        throw InvalidSpeed("speed must lie in [0, " + std::to_string(kMaxSpeed) + "], got " + std::to_string(v));
    }
    const double gamma = 1.0 / std::sqrt((1.0 - v) * (1.0 + v));
    return {v, gamma, 1.0 / gamma};
}

SmearingSpec SmearingSpec::with_radius(double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw RangeError("smearing radius must be positive, got " + std::to_string(radius));
    }
    return SmearingSpec(radius);
}

BathSpec BathSpec::thermal(double temperature, double speed, double coupling) {
    if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
        throw RangeError("temperature must be finite and nonnegative, got " + std::to_string(temperature));
    }
    if (!(coupling >= 0.0) || !std::isfinite(coupling)) {
        throw RangeError("coupling must be finite and nonnegative, got " + std::to_string(coupling));
    }
    TrajectorySpec::from_speed(speed);
    const double beta = temperature == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / temperature;
    return BathSpec(temperature, beta, speed, coupling);
}

double field_variance(const TrajectorySpec& traj, const SmearingSpec& smear, const BathSpec& bath,
                      const QuadratureConfig& quad) {
    return integrate_part(traj, smear, bath.beta(), Part::Variance, 0.0, quad);
}

double wightman_re(const TrajectorySpec& traj, const SmearingSpec& smear, const BathSpec& bath,
                   double delta_tau, const QuadratureConfig& quad) {
    return integrate_part(traj, smear, bath.beta(), Part::Real, delta_tau, quad);
}

double wightman_im(const TrajectorySpec& traj, const SmearingSpec& smear, double delta_tau,
                   const QuadratureConfig& quad) {
    if (delta_tau == 0.0) {
        return 0.0;
    }
    return integrate_part(traj, smear, std::numeric_limits<double>::infinity(), Part::Imaginary, delta_tau,
                          quad);
}

WightmanValues wightman_values(const TrajectorySpec& traj, const SmearingSpec& smear, const BathSpec& bath,
                               double delta_tau, const QuadratureConfig& quad) {
    WightmanValues w;
    w.variance = field_variance(traj, smear, bath, quad);
    w.re_w = wightman_re(traj, smear, bath, delta_tau, quad);
    w.im_w = wightman_im(traj, smear, delta_tau, quad);
    w.delta_tau = delta_tau;
    return w;
}

}  // namespace otto
