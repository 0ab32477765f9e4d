#pragma once

#include <array>
#include <complex>

#include "otto/wightman.hpp"

// Exact detector updates for one and two delta-kick interactions with a
// thermal field. States are diagonal in the energy basis,
// rho = (1 - r)/2 |Omega><Omega| + (1 + r)/2 |0><0| = (I - r Z)/2, and every
// map here keeps them diagonal, so a state is just (r, Omega).

namespace otto {

/// Diagonal two-level state. r in [-1, 1]; negative r is a population
/// inversion, which the closed cycle reaches at strong coupling.
struct DetectorState {
    double r = 0.0;
    double omega = 1.0;

    /// Throws PurityOutOfRange for |r| > 1, RangeError for omega <= 0.
    void validate() const;
};

/// One instantaneous interaction lambda delta(t - t_i) mu(tau) (x) phi_f.
struct KickSpec {
    double coupling = 0.0;     // lambda, units 1/Omega_c
    double tau_dot = 1.0;      // dtau/dt at the kick
    double proper_time = 0.0;  // tau_i
};

/// Affine purity maps: double kick r' = a r + b, single kick r' = hot_decay r.
struct ChannelCoeffs {
    double a_coeff = 1.0;
    double b_coeff = 0.0;
    double hot_decay = 1.0;
};

/// Expectation with a commutator phase, magnitude * e^{i phase}.
struct PhasedValue {
    double magnitude = 1.0;
    double phase = 0.0;
    [[nodiscard]] std::complex<double> value() const { return std::polar(magnitude, phase); }
};

/// Thermal expectations of the field rotations V_i = exp(i lambda tau_dot_i phi_f(tau_i)).
struct VProductExpectations {
    double v1_sq = 1.0;            // <V1^2>
    PhasedValue v1d_v2sq_v1;       // <V1^dag V2^2 V1>
    PhasedValue v1_v2sq_v1d;       // <V1 V2^2 V1^dag>
    double v1d_v2sq_v1d = 1.0;     // <V1^dag V2^2 V1^dag>
    double v1_v2sq_v1 = 1.0;       // <V1 V2^2 V1>
};

/// Second moments of the field at the two kicks. Stationary trajectories
/// have variance_1 == variance_2.
struct PairCorrelations {
    double variance_1 = 0.0;
    double variance_2 = 0.0;
    double re_w = 0.0;
    double im_w = 0.0;
};

enum class KickCount { Single, Double };

using DensityMatrix = std::array<std::array<std::complex<double>, 2>, 2>;

/// Flip probability of the single-kick bit-flip channel (1-p) rho + p mu rho mu,
/// p = (1 - exp(-2 lambda^2 tau_dot^2 variance)) / 2.
[[nodiscard]] double bit_flip_probability(const KickSpec& kick, double variance);

/// exp(-2 lambda^2 tau_dot^2 variance). A single kick only ever shrinks |r|,
/// so one interaction per bath cannot cool the detector.
[[nodiscard]] double single_kick_decay(const KickSpec& kick, double variance);

/// (A, B) of the double kick at gap omega, with delta_tau = k2.proper_time -
/// k1.proper_time matching w.delta_tau. The returned hot_decay is 1.
///
///   A = e^{-2 l^2 t2^2 V} e^{-2 l^2 t1^2 V} [cos^2(O dt / 2) e^{-4 l^2 t1 t2 ReW}
///                                          + sin^2(O dt / 2) e^{+4 l^2 t1 t2 ReW}]
///   B = e^{-2 l^2 t2^2 V} sin(O dt) sin(4 l^2 t1 t2 ImW)
///
/// Requires equal couplings and k1 strictly before k2 (RangeError otherwise).
/// Throws PositivityViolation when |A (+/-1) + B| > 1 + 1e-12.
[[nodiscard]] ChannelCoeffs double_kick_coeffs(const KickSpec& k1, const KickSpec& k2,
                                               const WightmanValues& w, double omega);

[[nodiscard]] VProductExpectations v_product_expectations(const KickSpec& k1, const KickSpec& k2,
                                                          const PairCorrelations& fields);
/// Stationary overload: both variances taken from w.variance.
[[nodiscard]] VProductExpectations v_product_expectations(const KickSpec& k1, const KickSpec& k2,
                                                          const WightmanValues& w);

/// Detector state after both kicks, assembled term by term from the five
/// field expectations:
///   Phi(rho) = 1/2 Pi2 Pi1(rho) + Pi2(P1- rho P1+) <V1^2>
///            + P2- (P1- rho P1- <V1+ V2^2 V1> + P1- rho P1+ <V1 V2^2 V1>) P2+
///            + P2- (P1+ rho P1- <V1+ V2^2 V1+> + P1+ rho P1+ <V1 V2^2 V1+>) P2+
///            + h.c.
/// with P_i^{+/-} = (I +/- mu(tau_i)) / 2 and Pi_i(rho) = sum_s P_i^s rho P_i^s.
/// Basis order is (|Omega>, |0>).
[[nodiscard]] DensityMatrix assemble_final_state(const DetectorState& state, const KickSpec& k1,
                                                 const KickSpec& k2, const VProductExpectations& e);

/// r of (I - r Z)/2 with Z = |Omega><Omega| - |0><0|, i.e. rho_11 - rho_00 in
/// the (|Omega>, |0>) basis.
[[nodiscard]] double purity_of(const DensityMatrix& rho);

/// Single: r' = hot_decay r. Double: r' = a r + b. Omega is unchanged.
/// Throws PositivityViolation if |r'| exceeds 1 + 1e-12.
[[nodiscard]] DetectorState apply_affine(const DetectorState& state, const ChannelCoeffs& coeffs,
                                         KickCount which);

}  // namespace otto
