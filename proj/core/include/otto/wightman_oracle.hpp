#pragma once

#include <complex>

#include "otto/wightman.hpp"

// Brute-force reference for the Wightman integrals: the mode integral over
// |k| and mu = cos(theta) evaluated before the angular integration, i.e.
//
//   W = 1/(8 pi^2) int_0^inf dk k int_{-1}^{1} dmu exp(-pi k^2 gamma^2 R^2 (1 - v mu)^2 / 8)
//         [coth(beta k / 2) cos(w delta_tau) + i sin(w delta_tau)],
//   w = k gamma (1 - v mu),
//
// on a fixed composite 16-point Gauss–Legendre grid. Shares no code with the
// erf-form path.

namespace otto {

struct OracleGrid {
    int k_panels = 64;   // panels per k sub-range
    int mu_panels = 8;
};

/// Direction of travel along the quantization axis. Only the speed should
/// matter once the angular integral is done.
enum class Heading { Forward, Backward };

[[nodiscard]] double field_variance_oracle(const TrajectorySpec& traj, const SmearingSpec& smear,
                                           const BathSpec& bath, const OracleGrid& grid = {},
                                           Heading heading = Heading::Forward);

[[nodiscard]] std::complex<double> wightman_oracle_2d(const TrajectorySpec& traj, const SmearingSpec& smear,
                                                      double delta_tau, const BathSpec& bath,
                                                      const OracleGrid& grid = {},
                                                      Heading heading = Heading::Forward);

}  // namespace otto
