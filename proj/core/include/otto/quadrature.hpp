#pragma once

#include <functional>
#include <span>

namespace otto {

/// Tolerances for every adaptive integral in the library.
struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;

    /// Throws RangeError unless 0 < rel_tol < 1e-3, abs_tol > 0 and
    /// max_subdivisions > 0.
    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // absolute error estimate
    int subdivisions = 0;
};

/// Globally adaptive Gauss–Kronrod (10/21) integration over [a, b].
///
/// The interval is first cut at every breakpoint strictly inside (a, b); the
/// panel with the largest |K - G| estimate is then bisected until the summed
/// estimate is below max(abs_tol, rel_tol * |integral|). Throws
/// QuadratureFailure once max_subdivisions panels are in use.
[[nodiscard]] QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                                  double a, double b,
                                                  std::span<const double> breakpoints,
                                                  const QuadratureConfig& config);

}  // namespace otto
