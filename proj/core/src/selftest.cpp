#include "otto/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <utility>

#include "otto/channel.hpp"
#include "otto/config.hpp"
#include "otto/cycle.hpp"
#include "otto/error.hpp"
#include "otto/specfun.hpp"
#include "otto/sweep.hpp"
#include "otto/wightman.hpp"
#include "otto/wightman_oracle.hpp"

namespace otto {
namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// Runs `body`, which returns the worst deviation, and compares it to `limit`.
SelftestCheck check(std::string name, double limit, const std::function<double()>& body) {
    SelftestCheck c{std::move(name), false, {}};
    try {
        const double worst = body();
        c.passed = worst <= limit;
        c.detail = "worst " + sci(worst) + " (limit " + sci(limit) + ")";
    } catch (const std::exception& e) {
        c.detail = e.what();
    }
    return c;
}

double erf_against_series() {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> radius(0.0, 4.0);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double r = radius(rng);
        const double t = angle(rng);
        const double x = r * std::cos(t);
        const double y = r * std::sin(t);
        const auto fast = specfun::erf_complex(x, y);
        const auto slow = specfun::erf_series_oracle(x, y);
        worst = std::max(worst, std::abs(fast - slow) / std::max(std::abs(slow), 1.0));
    }
    return worst;
}

double wightman_against_oracle() {
    QuadratureConfig quad;
    double worst = 0.0;
    for (double v : {0.3, 0.9}) {
        for (double temperature : {0.01, 1.0}) {
            const auto traj = TrajectorySpec::from_speed(v);
            const auto smear = SmearingSpec::with_radius(1.0);
            const auto bath = BathSpec::thermal(temperature, v, 1.0);
            const double variance = field_variance(traj, smear, bath, quad);
            worst = std::max(worst, std::abs(variance - field_variance_oracle(traj, smear, bath)) / variance);
            for (double dtau : {1.0, 2.0}) {
                const auto w = wightman_oracle_2d(traj, smear, dtau, bath);
                const double re = wightman_re(traj, smear, bath, dtau, quad);
                const double im = wightman_im(traj, smear, dtau, quad);
                worst = std::max(worst, std::abs(re - w.real()) / std::max(std::abs(w.real()), 1e-300));
                worst = std::max(worst, std::abs(im - w.imag()) / std::max(std::abs(w.imag()), 1e-300));
            }
        }
    }
    return worst;
}

// Field data that a Gaussian state can have: |W| <= variance.
WightmanValues random_fields(std::mt19937_64& rng, double delta_tau) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    WightmanValues w;
    w.variance = 0.5 * unit(rng);
    const double magnitude = w.variance * unit(rng);
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    w.re_w = magnitude * std::cos(angle);
    w.im_w = magnitude * std::sin(angle);
    w.delta_tau = delta_tau;
    return w;
}

double no_go() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const KickSpec kick{10.0 * unit(rng), 0.1 + 0.9 * unit(rng), 0.0};
        const double r = unit(rng);
        const ChannelCoeffs coeffs{1.0, 0.0, single_kick_decay(kick, unit(rng))};
        const double r_out = apply_affine({r, 1.0}, coeffs, KickCount::Single).r;
        worst = std::max(worst, r_out - r);
    }
    return worst;
}

double positivity_and_assembly(bool assembly) {
    std::mt19937_64 rng(assembly ? 11 : 13);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double tau_dot = 0.1 + 0.9 * unit(rng);
        const double t1 = 5.0 * unit(rng);
        const double dtau = 0.01 + 5.0 * unit(rng);
        const double coupling = 10.0 * unit(rng);
        const double omega = 0.5 + 2.0 * unit(rng);
        const KickSpec k1{coupling, tau_dot, t1};
        const KickSpec k2{coupling, tau_dot, t1 + dtau};
        const WightmanValues w = random_fields(rng, k2.proper_time - k1.proper_time);
        const ChannelCoeffs c = double_kick_coeffs(k1, k2, w, omega);
        if (!assembly) {
            const double excess = std::max({std::abs(c.a_coeff + c.b_coeff), std::abs(-c.a_coeff + c.b_coeff)}) - 1.0;
            worst = std::max({worst, excess, c.a_coeff > 0.0 ? 0.0 : 1.0, c.a_coeff - 1.0});
            continue;
        }
        const auto e = v_product_expectations(k1, k2, w);
        const double b = purity_of(assemble_final_state({0.0, omega}, k1, k2, e));
        const double a = purity_of(assemble_final_state({1.0, omega}, k1, k2, e)) - b;
        worst = std::max({worst, std::abs(a - c.a_coeff), std::abs(b - c.b_coeff)});
    }
    return worst;
}

// Worst ledger sum and worst fixed-point residual over a short scan.
std::pair<double, double> cycle_residuals(int workers) {
    SweepSpec spec;
    spec.fixed.coupling_cold = spec.fixed.coupling_hot = 10.0;
    spec.axes.push_back({Parameter::DeltaT, {0.5, 1.0, 1.5, 2.0, 3.0, 4.0}});
    double balance = 0.0;
    double fixed = 0.0;
    for (const ResultRow& row : sweep(spec, workers)) {
        if (!row.result) {
            throw NumericError("sweep point failed: " + row.error_flag);
        }
        const CycleResult& r = *row.result;
        const double fixed_point = r.coeffs.a_coeff * (r.coeffs.hot_decay * r.r_c) + r.coeffs.b_coeff;
        balance = std::max(balance, std::abs(r.ledger.total()));
        fixed = std::max(fixed, std::abs(fixed_point - r.r_c));
    }
    return {balance, fixed};
}

}  // namespace

bool SelftestReport::passed() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const SelftestCheck& c) { return c.passed; });
}

SelftestReport run_selftest(int workers) {
    SelftestReport report;
    report.checks.push_back(check("erf_complex vs series", 1e-12, erf_against_series));
    report.checks.push_back(check("erf-form integrals vs mode integral", 1e-6, wightman_against_oracle));
    report.checks.push_back(check("single kick never purifies", 0.0, no_go));
    report.checks.push_back(check("double kick positivity", 1e-12, [] { return positivity_and_assembly(false); }));
    report.checks.push_back(check("coefficients vs assembled state", 1e-12, [] { return positivity_and_assembly(true); }));
    report.checks.push_back(check("cycle energy balance", 1e-12, [workers] { return cycle_residuals(workers).first; }));
    report.checks.push_back(check("cycle fixed point", 1e-10, [workers] { return cycle_residuals(workers).second; }));
    return report;
}

}  // namespace otto
