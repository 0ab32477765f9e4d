#include "otto/specfun.hpp"

#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "otto/error.hpp"

namespace otto::specfun {
namespace {

constexpr double kPi = std::numbers::pi;

// e^{-shift} erf(x + iy) for x >= 0, y >= 0.
//
// Fourier-type series from Abramowitz and Stegun:
//   erf(x+iy) = erf(x) + e^{-x^2}/(2 pi x) [(1 - cos 2xy) + i sin 2xy]
//             + (2/pi) e^{-x^2} sum_n e^{-n^2/4}/(n^2 + 4x^2) [f_n + i g_n]
//   f_n = 2x - 2x cosh(ny) cos(2xy) + n sinh(ny) sin(2xy)
//   g_n = 2x cosh(ny) sin(2xy) + n sinh(ny) cos(2xy)
// Each exponential is merged into a single exp() argument together with the
// shift, and the 1 - cos / 1 - cosh differences use half-angle forms.
// With `complement`, returns e^{-shift} erfc(x + iy) instead; the head term
// becomes erfc(x) and the corrections change sign, so no cancellation
// against 1 occurs for large x.
ComplexValue erf_first_quadrant(double x, double y, double shift, bool complement) noexcept {
    const double head = std::exp(-shift) * (complement ? std::erfc(x) : std::erf(x));
    if (x == 0.0 && y == 0.0) {
        return {head, 0.0};
    }
    // Every correction term is bounded by exp(y^2 - x^2 - shift).
    if (y * y - x * x - shift < -750.0) {
        return {head, 0.0};
    }

    const double gauss_x = std::exp(-x * x - shift);
    const double sin_xy = std::sin(x * y);
    const double sin_2xy = std::sin(2.0 * x * y);
    const double cos_2xy = std::cos(2.0 * x * y);

    double re = head;
    double im = 0.0;
    if (x > 0.0) {
        re += gauss_x * sin_xy * sin_xy / (kPi * x);
        im += gauss_x * sin_2xy / (2.0 * kPi * x);
    } else {
        im += gauss_x * y / kPi;
    }

    const int n_max = static_cast<int>(std::ceil(2.0 * y + 15.0));
    double sum_re = 0.0;
    double sum_im = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double nn = n;
        const double ny = nn * y;
        const double expo = -x * x - shift - 0.25 * nn * nn;
        double ch;   // e^{expo} cosh(ny)
        double sh;   // e^{expo} sinh(ny)
        double bmc;  // e^{expo} (1 - cosh(ny))
        if (ny < 20.0) {
            const double base = std::exp(expo);
            const double half = std::sinh(0.5 * ny);
            ch = base * std::cosh(ny);
            sh = base * std::sinh(ny);
            bmc = -2.0 * base * half * half;
        } else {
            const double up = std::exp(expo + ny);
            const double down = std::exp(expo - ny);
            const double gap = 1.0 - std::exp(-ny);
            ch = 0.5 * (up + down);
            sh = 0.5 * (up - down);
            bmc = -0.5 * up * gap * gap;
        }
        const double denom = nn * nn + 4.0 * x * x;
        // e^{expo} - ch cos(2xy) = bmc + 2 ch sin^2(xy)
        sum_re += (2.0 * x * (bmc + 2.0 * ch * sin_xy * sin_xy) + nn * sh * sin_2xy) / denom;
        sum_im += (2.0 * x * ch * sin_2xy + nn * sh * cos_2xy) / denom;
    }
    re += (2.0 / kPi) * sum_re;
    im += (2.0 / kPi) * sum_im;
    if (complement) {
        return {2.0 * head - re, -im};
    }
    return {re, im};
}

ComplexValue apply_symmetry(ComplexValue first_quadrant, double x, double y) noexcept {
    ComplexValue value = y < 0.0 ? std::conj(first_quadrant) : first_quadrant;
    if (x < 0.0) {
        value = -std::conj(value);
    }
    return value;
}

}  // namespace

double erf_real(double x) noexcept { return std::erf(x); }

ComplexValue erf_complex(double x, double y) noexcept {
    return apply_symmetry(erf_first_quadrant(std::abs(x), std::abs(y), 0.0, false), x, y);
}

ComplexValue erf_complex_scaled(double x, double y) noexcept {
    return apply_symmetry(erf_first_quadrant(std::abs(x), std::abs(y), y * y, false), x, y);
}

ComplexValue erfc_complex_scaled(double x, double y) noexcept {
    if (x < 0.0) {
        // erfc(-z) = 2 - erfc(z)
        const ComplexValue mirrored = erfc_complex_scaled(-x, -y);
        return ComplexValue{2.0 * std::exp(-y * y), 0.0} - mirrored;
    }
    const ComplexValue value = erf_first_quadrant(x, std::abs(y), y * y, true);
    return y < 0.0 ? std::conj(value) : value;
}

ComplexValue erf_series_oracle(double x, double y) {
    using Quad = boost::multiprecision::cpp_bin_float_quad;
    if (x * x + y * y > 36.0) {
        throw RadiusExceeded("erf_series_oracle: |z| > 6");
    }
    if (x == 0.0 && y == 0.0) {
        return {0.0, 0.0};
    }
    const Quad zr = x;
    const Quad zi = y;
    // -z^2
    const Quad mz2_re = zi * zi - zr * zr;
    const Quad mz2_im = -2 * zr * zi;

    Quad term_re = zr;  // (-1)^n z^{2n+1} / n!
    Quad term_im = zi;
    Quad sum_re = zr;
    Quad sum_im = zi;
    const double radius_sq = x * x + y * y;
    for (int n = 1; n < 1000; ++n) {
        const Quad next_re = (term_re * mz2_re - term_im * mz2_im) / n;
        const Quad next_im = (term_re * mz2_im + term_im * mz2_re) / n;
        term_re = next_re;
        term_im = next_im;
        const Quad add_re = term_re / (2 * n + 1);
        const Quad add_im = term_im / (2 * n + 1);
        sum_re += add_re;
        sum_im += add_im;
        if (n > radius_sq) {
            const Quad add_mag = boost::multiprecision::hypot(add_re, add_im);
            const Quad sum_mag = boost::multiprecision::hypot(sum_re, sum_im);
            if (add_mag < Quad(1e-18) * sum_mag) {
                break;
            }
        }
    }
    const Quad scale = 2 / boost::multiprecision::sqrt(boost::math::constants::pi<Quad>());
    return {static_cast<double>(scale * sum_re), static_cast<double>(scale * sum_im)};
}

}  // namespace otto::specfun
