#pragma once

#include <complex>

namespace otto::specfun {

using ComplexValue = std::complex<double>;

/// Error function on the real line.
[[nodiscard]] double erf_real(double x) noexcept;

/// erf(x + iy).
///
/// Accurate to ~1e-14 relative for |y| <= 10 and |x| <= 30, and usable well
/// beyond. Exponential factors are combined before evaluation, so the result
/// only overflows when |erf(x + iy)| itself exceeds the double range.
/// Exactly odd and conjugate-symmetric: both symmetries are applied on input.
[[nodiscard]] ComplexValue erf_complex(double x, double y) noexcept;

/// e^{-y^2} erf(x + iy), evaluated without forming either factor.
///
/// The Wightman integrands carry a Gaussian e^{-y^2} prefactor that cancels
/// the e^{+y^2} growth of erf off the real axis; this entry point keeps the
/// product in range for any |y|.
[[nodiscard]] ComplexValue erf_complex_scaled(double x, double y) noexcept;

/// e^{-y^2} erfc(x + iy). Keeps full relative accuracy in the x -> +inf tail,
/// where e^{-y^2} erf(x + iy) would cancel against e^{-y^2}.
[[nodiscard]] ComplexValue erfc_complex_scaled(double x, double y) noexcept;

/// Maclaurin series of erf(x + iy), summed in 113-bit floating point until a
/// term drops below 1e-18 of the partial sum. Verification oracle only.
/// Throws RadiusExceeded when |x + iy| > 6.
[[nodiscard]] ComplexValue erf_series_oracle(double x, double y);

}  // namespace otto::specfun
