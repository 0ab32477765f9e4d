#include "otto/wightman_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "otto/error.hpp"

namespace otto {
namespace {

constexpr double kPi = std::numbers::pi;
// Gaussian form factor exponent beyond which a mode is dropped (e^{-u^2}, u > 7.5).
constexpr double kFormFactorCut = 7.5;

using Rule = boost::math::quadrature::gauss<double, 16>;

// Composite Gauss–Legendre over [a, b] with `panels` equal panels.
template <class F>
auto composite(F&& f, double a, double b, int panels) {
    const auto& nodes = Rule::abscissa();
    const auto& weights = Rule::weights();
    const double width = (b - a) / panels;
    decltype(f(a)) sum{};
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * width;
        const double half = 0.5 * width;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const double dx = half * nodes[i];
            sum += (f(mid + dx) + f(mid - dx)) * (weights[i] * half);
        }
    }
    return sum;
}

std::complex<double> mode_integral(const TrajectorySpec& traj, const SmearingSpec& smear, double delta_tau,
                                   const BathSpec& bath, const OracleGrid& grid, Heading heading) {
    if (grid.k_panels <= 0 || grid.mu_panels <= 0) {
        throw RangeError("oracle grid needs positive panel counts");
    }
    const double gamma = traj.gamma();
    const double speed = traj.speed();
    const double velocity = heading == Heading::Forward ? speed : -speed;
    const double radius = smear.radius();
    const double form_scale = std::sqrt(kPi / 8.0) * gamma * radius;
    const double beta = bath.beta();
    const bool vacuum = bath.is_vacuum();

    auto angular = [&](double k) {
        const double a = form_scale * k;
        double mu_lo = -1.0;
        double mu_hi = 1.0;
        // Keep only directions with a (1 - v mu) <= kFormFactorCut.
        if (velocity != 0.0 && a * (1.0 + speed) > kFormFactorCut) {
            const double edge = (1.0 - kFormFactorCut / a) / velocity;
            if (velocity > 0.0) {
                mu_lo = std::max(-1.0, edge);
            } else {
                mu_hi = std::min(1.0, edge);
            }
        } else if (velocity == 0.0 && a > kFormFactorCut) {
            return std::complex<double>{};
        }
        if (mu_lo >= mu_hi) {
            return std::complex<double>{};
        }
        const double occupation = vacuum ? 1.0 : 1.0 / std::tanh(0.5 * beta * k);
        auto mode = [&](double mu) {
            const double doppler = 1.0 - velocity * mu;
            const double envelope = std::exp(-a * a * doppler * doppler);
            const double phase = k * gamma * doppler * delta_tau;
            return std::complex<double>{envelope * occupation * std::cos(phase), envelope * std::sin(phase)};
        };
        return k * composite(mode, mu_lo, mu_hi, grid.mu_panels);
    };

    const double k_max = kFormFactorCut / (form_scale * (1.0 - speed));
    std::complex<double> total;
    if (!vacuum) {
        // Resolve the thermal scale separately from the form-factor scale.
        const double k_split = std::min(0.5 * k_max, 40.0 * bath.temperature());
        total = composite(angular, 0.0, k_split, grid.k_panels) + composite(angular, k_split, k_max, grid.k_panels);
    } else {
        total = composite(angular, 0.0, k_max, 2 * grid.k_panels);
    }
    return total / (8.0 * kPi * kPi);
}

}  // namespace

double field_variance_oracle(const TrajectorySpec& traj, const SmearingSpec& smear, const BathSpec& bath,
                             const OracleGrid& grid, Heading heading) {
    return mode_integral(traj, smear, 0.0, bath, grid, heading).real();
}

std::complex<double> wightman_oracle_2d(const TrajectorySpec& traj, const SmearingSpec& smear, double delta_tau,
                                        const BathSpec& bath, const OracleGrid& grid, Heading heading) {
    if (!(delta_tau >= 0.0) || !std::isfinite(delta_tau)) {
        throw RangeError("delta_tau must be finite and nonnegative");
    }
    return mode_integral(traj, smear, delta_tau, bath, grid, heading);
}

}  // namespace otto
