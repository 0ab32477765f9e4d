#include "otto/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "otto/error.hpp"

namespace otto {
namespace {

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
    using Gauss = boost::math::quadrature::gauss<double, 10>;
    const auto& nodes = Kronrod::abscissa();
    const auto& k_weights = Kronrod::weights();
    const auto& g_weights = Gauss::weights();

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double kronrod = f(mid) * k_weights[0];
    double gauss = 0.0;
    // Odd indices are shared with the 10-point Gauss rule.
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const double dx = half * nodes[i];
        const double pair = f(mid + dx) + f(mid - dx);
        kronrod += pair * k_weights[i];
        if (i % 2 == 1) {
            gauss += pair * g_weights[i / 2];
        }
    }
    kronrod *= half;
    gauss *= half;
    const double error = std::max(std::abs(kronrod - gauss), 2.0 * std::abs(kronrod) * 2.2e-16);
    return {a, b, kronrod, error};
}

}  // namespace

void QuadratureConfig::validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1e-3)) {
        throw RangeError("quadrature rel_tol must lie in (0, 1e-3), got " + std::to_string(rel_tol));
    }
    if (!(abs_tol > 0.0)) {
        throw RangeError("quadrature abs_tol must be positive");
    }
    if (max_subdivisions <= 0) {
        throw RangeError("quadrature max_subdivisions must be positive");
    }
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    std::span<const double> breakpoints,
                                    const QuadratureConfig& config) {
    std::vector<double> cuts{a};
    for (double p : breakpoints) {
        if (p > a && p < b) {
            cuts.push_back(p);
        }
    }
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());

    std::priority_queue<Panel> panels;
    double total = 0.0;
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Panel p = evaluate_panel(f, cuts[i], cuts[i + 1]);
        total += p.value;
        total_error += p.error;
        panels.push(p);
    }

    auto converged = [&] {
        return total_error <= std::max(config.abs_tol, config.rel_tol * std::abs(total));
    };

    while (!converged()) {
        if (static_cast<int>(panels.size()) >= config.max_subdivisions) {
            throw QuadratureFailure("adaptive quadrature did not converge within " +
                                        std::to_string(config.max_subdivisions) +
                                        " subdivisions (error estimate " +
                                        std::to_string(total_error) + ")",
                                    total_error);
        }
        Panel worst = panels.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Panel is at floating-point resolution; nothing left to refine.
            throw QuadratureFailure("adaptive quadrature hit floating-point resolution", total_error);
        }
        panels.pop();
        const Panel left = evaluate_panel(f, worst.a, mid);
        const Panel right = evaluate_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum to drop the drift of the running updates.
    QuadratureResult result;
    result.subdivisions = static_cast<int>(panels.size());
    while (!panels.empty()) {
        result.value += panels.top().value;
        result.error += panels.top().error;
        panels.pop();
    }
    return result;
}

}  // namespace otto
