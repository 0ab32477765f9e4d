#pragma once

#include <array>
#include <complex>

namespace otto::oracle {

// Purity after two delta kicks, computed by brute force: each kick is
//   U_i = P_i^- (x) V_i + P_i^+ (x) V_i^dag,   V_i = exp(i g_i phi_i),
// so U2 U1 (rho (x) sigma) U1^dag U2^dag expands into 16 detector terms
// P2 P1 rho P1 P2, each weighted by a four-fold Weyl product of field
// exponentials. Those are evaluated from the Gaussian rule
//   <exp(i sum c_j phi_j)> = exp(-c^T C c / 2)
// with the ordering phases exp(-1/2 sum_{j<k} c_j c_k [phi_j, phi_k]),
// [phi_1, phi_2] = 2i im_w. Nothing here is shared with the library's
// closed-form coefficients.
struct WeylInputs {
    double g1 = 0.0;  // coupling * tau_dot of kick 1
    double g2 = 0.0;
    double variance_1 = 0.0;
    double variance_2 = 0.0;
    double re_w = 0.0;
    double im_w = 0.0;
    double omega = 1.0;
    double tau1 = 0.0;
    double tau2 = 0.0;
};

inline double weyl_trace_purity(double r, const WeylInputs& in) {
    using Cx = std::complex<double>;
    using M = std::array<std::array<Cx, 2>, 2>;
    const auto mul = [](const M& a, const M& b) {
        M c{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        return c;
    };
    // Basis (|Omega>, |0>).
    const auto projector = [&](double tau, int s) {
        const Cx e = std::polar(1.0, in.omega * tau);
        return M{{{0.5, 0.5 * s * e}, {0.5 * s * std::conj(e), 0.5}}};
    };
    const M rho{{{0.5 * (1.0 - r), 0.0}, {0.0, 0.5 * (1.0 + r)}}};

    struct Op {
        int field;
        double c;
    };
    const auto expect = [&](const std::array<Op, 4>& ops) {
        Cx phase{0.0, 0.0};
        double total[2] = {0.0, 0.0};
        for (std::size_t j = 0; j < ops.size(); ++j) {
            for (std::size_t k = j + 1; k < ops.size(); ++k) {
                if (ops[j].field == ops[k].field) continue;
                const Cx commutator = ops[j].field == 0 ? Cx{0.0, 2.0 * in.im_w} : Cx{0.0, -2.0 * in.im_w};
                phase += -0.5 * ops[j].c * ops[k].c * commutator;
            }
            total[ops[j].field] += ops[j].c;
        }
        const double quad = total[0] * total[0] * in.variance_1 + total[1] * total[1] * in.variance_2 +
                            2.0 * total[0] * total[1] * in.re_w;
        return std::exp(phase - 0.5 * quad);
    };

    M out{};
    const int signs[2] = {1, -1};
    for (int s1 : signs)
        for (int s2 : signs)
            for (int s1p : signs)
                for (int s2p : signs) {
                    const M det = mul(mul(mul(mul(projector(in.tau2, s2), projector(in.tau1, s1)), rho),
                                          projector(in.tau1, s1p)),
                                      projector(in.tau2, s2p));
                    // Sign -1 selects V (coefficient +g), +1 selects V^dag.
                    // Field factor: <V1^(s1p)dag V2^(s2p)dag V2^(s2) V1^(s1)>.
                    const std::array<Op, 4> ops{{{0, s1p * in.g1}, {1, s2p * in.g2}, {1, -s2 * in.g2}, {0, -s1 * in.g1}}};
                    const Cx weight = expect(ops);
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j)
                            out[i][j] += weight * det[i][j];
                }
    // rho = (I - r Z)/2  =>  r = -tr(Z rho)
    return (out[1][1] - out[0][0]).real();
}

}  // namespace otto::oracle
