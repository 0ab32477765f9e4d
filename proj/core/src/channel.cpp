#include "otto/channel.hpp"

#include <cmath>
#include <string>

#include "otto/error.hpp"

namespace otto {
namespace {

constexpr double kPositivitySlack = 1e-12;

using Complex = std::complex<double>;

DensityMatrix operator*(const DensityMatrix& lhs, const DensityMatrix& rhs) {
    DensityMatrix out{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out[i][j] = lhs[i][0] * rhs[0][j] + lhs[i][1] * rhs[1][j];
        }
    }
    return out;
}

DensityMatrix operator+(const DensityMatrix& lhs, const DensityMatrix& rhs) {
    DensityMatrix out{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out[i][j] = lhs[i][j] + rhs[i][j];
        }
    }
    return out;
}

DensityMatrix operator*(Complex factor, const DensityMatrix& m) {
    DensityMatrix out{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out[i][j] = factor * m[i][j];
        }
    }
    return out;
}

DensityMatrix adjoint(const DensityMatrix& m) {
    return {{{std::conj(m[0][0]), std::conj(m[1][0])}, {std::conj(m[0][1]), std::conj(m[1][1])}}};
}

// P^{sign} = (I + sign mu(tau)) / 2,  mu(tau) = e^{i O tau}|O><0| + e^{-i O tau}|0><O|.
DensityMatrix projector(double omega, double tau, int sign) {
    const Complex up = std::polar(1.0, omega * tau);
    return {{{0.5, 0.5 * sign * up}, {0.5 * sign * std::conj(up), 0.5}}};
}

void check_affine_positivity(double a, double b) {
    if (std::abs(a + b) > 1.0 + kPositivitySlack || std::abs(-a + b) > 1.0 + kPositivitySlack) {
        throw PositivityViolation("double-kick map leaves the Bloch interval: A = " + std::to_string(a) +
                                  ", B = " + std::to_string(b));
    }
}

}  // namespace

void DetectorState::validate() const {
    if (!(std::abs(r) <= 1.0)) {
        throw PurityOutOfRange("purity must lie in [-1, 1], got " + std::to_string(r));
    }
    if (!(omega > 0.0)) {
        throw RangeError("energy gap must be positive, got " + std::to_string(omega));
    }
}

double bit_flip_probability(const KickSpec& kick, double variance) {
    // 1 - e^{-x} via expm1 keeps p accurate for weak kicks.
    const double exponent = 2.0 * kick.coupling * kick.coupling * kick.tau_dot * kick.tau_dot * variance;
    return -0.5 * std::expm1(-exponent);
}

double single_kick_decay(const KickSpec& kick, double variance) {
    return std::exp(-2.0 * kick.coupling * kick.coupling * kick.tau_dot * kick.tau_dot * variance);
}

ChannelCoeffs double_kick_coeffs(const KickSpec& k1, const KickSpec& k2, const WightmanValues& w,
                                 double omega) {
    if (k1.coupling != k2.coupling) {
        throw RangeError("double kick requires equal couplings");
    }
    if (!(k1.proper_time < k2.proper_time)) {
        throw RangeError("first kick must precede the second");
    }
    const double delta_tau = k2.proper_time - k1.proper_time;
    if (std::abs(delta_tau - w.delta_tau) > 1e-12 * std::max(1.0, delta_tau)) {
        throw RangeError("Wightman values were computed for a different separation");
    }
    const double lam_sq = k1.coupling * k1.coupling;
    const double t1 = k1.tau_dot;
    const double t2 = k2.tau_dot;
    const double v = w.variance;

    const double decay = -2.0 * lam_sq * (t2 * t2 + t1 * t1) * v;
    const double cross = 4.0 * lam_sq * t1 * t2 * w.re_w;
    const double phase = omega * delta_tau;

    ChannelCoeffs coeffs;
    if (std::abs(cross) < 1.0) {
        // cos^2(x/2) e^{-c} + sin^2(x/2) e^{c} = cosh c - cos x sinh c. The
        // bracket stays above e^{-1} here and is exactly 1 at zero coupling.
        coeffs.a_coeff = std::exp(decay) * (std::cosh(cross) - std::cos(phase) * std::sinh(cross));
    } else {
        // Two positive terms, each with its exponents merged.
        const double c = std::cos(0.5 * phase);
        const double s = std::sin(0.5 * phase);
        coeffs.a_coeff = c * c * std::exp(decay - cross) + s * s * std::exp(decay + cross);
    }
    coeffs.b_coeff = std::exp(-2.0 * lam_sq * t2 * t2 * v) * std::sin(phase) *
                     std::sin(4.0 * lam_sq * t1 * t2 * w.im_w);
    coeffs.hot_decay = 1.0;
    check_affine_positivity(coeffs.a_coeff, coeffs.b_coeff);
    return coeffs;
}

VProductExpectations v_product_expectations(const KickSpec& k1, const KickSpec& k2,
                                            const PairCorrelations& fields) {
    // V_i = exp(i g_i phi_i),  g_i = lambda_i tau_dot_i
    const double g1 = k1.coupling * k1.tau_dot;
    const double g2 = k2.coupling * k2.tau_dot;
    const double v1 = fields.variance_1;
    const double v2 = fields.variance_2;
    // [phi_1, phi_2] = 2i Im W
    const double commutator_phase = 4.0 * g1 * g2 * fields.im_w;
    const double second_kick = std::exp(-2.0 * g2 * g2 * v2);
    // <(g2 phi_2 -/+ g1 phi_1)^2> = g2^2 V2 + g1^2 V1 -/+ 2 g1 g2 Re W
    const double diagonal = g2 * g2 * v2 + g1 * g1 * v1;
    const double cross = 2.0 * g1 * g2 * fields.re_w;

    VProductExpectations e;
    e.v1_sq = std::exp(-2.0 * g1 * g1 * v1);
    e.v1d_v2sq_v1 = {second_kick, commutator_phase};
    e.v1_v2sq_v1d = {second_kick, -commutator_phase};
    e.v1d_v2sq_v1d = std::exp(-2.0 * (diagonal - cross));
    e.v1_v2sq_v1 = std::exp(-2.0 * (diagonal + cross));
    return e;
}

VProductExpectations v_product_expectations(const KickSpec& k1, const KickSpec& k2, const WightmanValues& w) {
    return v_product_expectations(k1, k2, PairCorrelations{w.variance, w.variance, w.re_w, w.im_w});
}

DensityMatrix assemble_final_state(const DetectorState& state, const KickSpec& k1, const KickSpec& k2,
                                   const VProductExpectations& e) {
    const DensityMatrix rho{{{0.5 * (1.0 - state.r), 0.0}, {0.0, 0.5 * (1.0 + state.r)}}};
    const DensityMatrix p1m = projector(state.omega, k1.proper_time, -1);
    const DensityMatrix p1p = projector(state.omega, k1.proper_time, +1);
    const DensityMatrix p2m = projector(state.omega, k2.proper_time, -1);
    const DensityMatrix p2p = projector(state.omega, k2.proper_time, +1);

    auto dephase2 = [&](const DensityMatrix& m) { return p2p * m * p2p + p2m * m * p2m; };
    const DensityMatrix dephased = dephase2(p1p * rho * p1p + p1m * rho * p1m);

    DensityMatrix half = Complex{0.5} * dephased;
    half = half + Complex{e.v1_sq} * dephase2(p1m * rho * p1p);
    const DensityMatrix inner = e.v1d_v2sq_v1.value() * (p1m * rho * p1m) +
                                Complex{e.v1_v2sq_v1} * (p1m * rho * p1p) +
                                Complex{e.v1d_v2sq_v1d} * (p1p * rho * p1m) +
                                e.v1_v2sq_v1d.value() * (p1p * rho * p1p);
    half = half + p2m * inner * p2p;
    return half + adjoint(half);
}

double purity_of(const DensityMatrix& rho) { return (rho[1][1] - rho[0][0]).real(); }

DetectorState apply_affine(const DetectorState& state, const ChannelCoeffs& coeffs, KickCount which) {
    DetectorState out = state;
    if (which == KickCount::Single) {
        out.r = coeffs.hot_decay * state.r;
    } else {
        out.r = coeffs.a_coeff * state.r + coeffs.b_coeff;
    }
    if (!(std::abs(out.r) <= 1.0 + kPositivitySlack)) {
        throw PositivityViolation("channel output purity " + std::to_string(out.r) + " outside [-1, 1]");
    }
    return out;
}

}  // namespace otto
