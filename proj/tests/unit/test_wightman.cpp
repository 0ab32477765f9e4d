#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include "generators.hpp"
#include "otto/error.hpp"
#include "otto/wightman.hpp"
#include "otto/wightman_oracle.hpp"

using namespace otto;

namespace {

const QuadratureConfig kQuad;

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

struct Setup {
    TrajectorySpec traj;
    SmearingSpec smear;
    BathSpec bath;
};

Setup setup(double v, double radius, double temperature) {
    return {TrajectorySpec::from_speed(v), SmearingSpec::with_radius(radius), BathSpec::thermal(temperature, v, 1.0)};
}

}  // namespace

TEST_CASE("TrajectorySpec") {
    for (double v : {0.0, 0.1, 0.5, 0.6, 0.9, 0.99}) {
        const auto t = TrajectorySpec::from_speed(v);
        CHECK(t.gamma() == doctest::Approx(1.0 / std::sqrt(1.0 - v * v)).epsilon(2.5e-16));
        CHECK(std::abs(t.tau_dot() * t.gamma() - 1.0) <= std::numeric_limits<double>::epsilon());
        CHECK(t.gamma() >= 1.0);
    }
    CHECK(TrajectorySpec::from_speed(0.6).gamma() == doctest::Approx(1.25).epsilon(1e-15));
    CHECK_THROWS_AS(static_cast<void>(TrajectorySpec::from_speed(-0.1)), InvalidSpeed);
    CHECK_THROWS_AS(static_cast<void>(TrajectorySpec::from_speed(0.995)), InvalidSpeed);
    CHECK_THROWS_AS(static_cast<void>(TrajectorySpec::from_speed(std::nan(""))), InvalidSpeed);
}

TEST_CASE("SmearingSpec and BathSpec domains") {
    CHECK_THROWS_AS(static_cast<void>(SmearingSpec::with_radius(0.0)), RangeError);
    CHECK_THROWS_AS(static_cast<void>(SmearingSpec::with_radius(-1.0)), RangeError);
    const auto hot = BathSpec::thermal(4.0, 0.2, 3.0);
    CHECK(hot.beta() * hot.temperature() == 1.0);
    CHECK_FALSE(hot.is_vacuum());
    const auto vacuum = BathSpec::thermal(0.0, 0.0, 1.0);
    CHECK(vacuum.is_vacuum());
    CHECK(std::isinf(vacuum.beta()));
    CHECK_THROWS_AS(static_cast<void>(BathSpec::thermal(-1.0, 0.0, 1.0)), RangeError);
    CHECK_THROWS_AS(static_cast<void>(BathSpec::thermal(1.0, 0.0, -1.0)), RangeError);
    CHECK_THROWS_AS(static_cast<void>(BathSpec::thermal(1.0, 1.5, 1.0)), InvalidSpeed);
}

TEST_CASE("field_variance examples") {
    const auto slow = setup(1e-4, 1.0, 1.0);
    CHECK(rel(field_variance(slow.traj, slow.smear, slow.bath, kQuad),
              field_variance_oracle(slow.traj, slow.smear, slow.bath)) < 1e-6);

    const auto mid = setup(0.5, 1.0, 1.0);
    const double variance = field_variance(mid.traj, mid.smear, mid.bath, kQuad);
    CHECK(rel(variance, field_variance_oracle(mid.traj, mid.smear, mid.bath)) < 1e-7);

    // Large R suppresses every mode. The 1e-3 drop from R = 1 to R = 100 holds
    // for cold baths; a warm bath keeps coth ~ 2T/k at small k and only falls
    // off like T/R, so at T = 1 the check is the 1/R law itself.
    for (double temperature : {0.0, 0.01}) {
        const auto near = setup(0.5, 1.0, temperature);
        const auto wide = setup(0.5, 100.0, temperature);
        CHECK(field_variance(wide.traj, wide.smear, wide.bath, kQuad) <
              1e-3 * field_variance(near.traj, near.smear, near.bath, kQuad));
    }
    const auto wide = setup(0.5, 100.0, 1.0);
    const auto wider = setup(0.5, 1000.0, 1.0);
    const double wide_variance = field_variance(wide.traj, wide.smear, wide.bath, kQuad);
    const double wider_variance = field_variance(wider.traj, wider.smear, wider.bath, kQuad);
    CHECK(wide_variance < 1e-2 * variance);
    CHECK(wider_variance * 1000.0 == doctest::Approx(wide_variance * 100.0).epsilon(0.02));
}

TEST_CASE("wightman_re examples") {
    const auto s = setup(0.5, 1.0, 0.01);
    const double variance = field_variance(s.traj, s.smear, s.bath, kQuad);
    CHECK(rel(wightman_re(s.traj, s.smear, s.bath, 0.0, kQuad), variance) < 1e-8);

    const double dtau = 2.0 * std::sqrt(1.0 - 0.25);
    CHECK(rel(wightman_re(s.traj, s.smear, s.bath, dtau, kQuad),
              wightman_oracle_2d(s.traj, s.smear, dtau, s.bath).real()) < 1e-6);

    // Exponential decay beyond ~R holds for a warm bath. A cold bath keeps a
    // power-law tail from its k -> 0 modes, so this is checked at T = 1.
    const auto warm = setup(0.5, 1.0, 1.0);
    const double warm_variance = field_variance(warm.traj, warm.smear, warm.bath, kQuad);
    for (double dtau_large : {10.0, 15.0}) {
        const double re = wightman_re(warm.traj, warm.smear, warm.bath, dtau_large, kQuad);
        CHECK(std::abs(re) < 1e-6 * warm_variance);
        CHECK(std::abs(wightman_oracle_2d(warm.traj, warm.smear, dtau_large, warm.bath).real()) <
              1e-6 * warm_variance);
    }
    CHECK_THROWS_AS(static_cast<void>(wightman_re(s.traj, s.smear, s.bath, -1.0, kQuad)), RangeError);
}

TEST_CASE("wightman_im examples") {
    const auto s = setup(0.5, 1.0, 1.0);
    CHECK(wightman_im(s.traj, s.smear, 0.0, kQuad) == 0.0);
    const double im = wightman_im(s.traj, s.smear, 1.0, kQuad);
    for (double temperature : {0.01, 1.0, 5.0}) {
        const auto bath = BathSpec::thermal(temperature, 0.5, 1.0);
        CHECK(rel(im, wightman_oracle_2d(s.traj, s.smear, 1.0, bath).imag()) < 1e-6);
    }
    // No thermal factor: beta = 1 and beta = 100 give the same oracle value.
    const auto b1 = BathSpec::thermal(1.0, 0.5, 1.0);
    const auto b100 = BathSpec::thermal(0.01, 0.5, 1.0);
    CHECK(rel(wightman_oracle_2d(s.traj, s.smear, 1.0, b1).imag(),
              wightman_oracle_2d(s.traj, s.smear, 1.0, b100).imag()) < 1e-9);
}

TEST_CASE("oracle self-consistency") {
    // At rest the angular integral is trivial: variance = 1/(4 pi^2) int k e^{-a^2} coth(beta k / 2) dk.
    const auto rest = setup(0.0, 1.0, 1.0);
    const double scale = std::sqrt(std::numbers::pi / 8.0);
    const double reduced = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double k) {
            return k == 0.0 ? 2.0 / (4.0 * std::numbers::pi * std::numbers::pi)
                            : k * std::exp(-scale * scale * k * k) / std::tanh(0.5 * k) /
                                  (4.0 * std::numbers::pi * std::numbers::pi);
        },
        0.0, std::numeric_limits<double>::infinity(), 15, 1e-14);
    CHECK(rel(field_variance_oracle(rest.traj, rest.smear, rest.bath), reduced) < 1e-10);

    // Golden value, recorded from this oracle at its default grid.
    const auto mid = setup(0.5, 1.0, 1.0);
    CHECK(field_variance_oracle(mid.traj, mid.smear, mid.bath) == doctest::Approx(0.076208550996788346).epsilon(1e-12));

    // Only the speed matters after the angular integral.
    const auto fast = setup(0.9, 1.0, 1.0);
    CHECK(rel(field_variance_oracle(fast.traj, fast.smear, fast.bath, {}, Heading::Forward),
              field_variance_oracle(fast.traj, fast.smear, fast.bath, {}, Heading::Backward)) < 1e-12);
    const auto f = wightman_oracle_2d(fast.traj, fast.smear, 1.0, fast.bath, {}, Heading::Forward);
    const auto b = wightman_oracle_2d(fast.traj, fast.smear, 1.0, fast.bath, {}, Heading::Backward);
    CHECK(std::abs(f - b) < 1e-12 * std::abs(f));

    // Coincidence.
    const auto at_zero = wightman_oracle_2d(mid.traj, mid.smear, 0.0, mid.bath);
    CHECK(at_zero.imag() == 0.0);
    CHECK(rel(at_zero.real(), field_variance_oracle(mid.traj, mid.smear, mid.bath)) < 1e-13);
}

TEST_CASE("oracle grid refinement converges") {
    const auto s = setup(0.7, 1.0, 0.1);
    const auto at = [&](int k_panels, int mu_panels) {
        return wightman_oracle_2d(s.traj, s.smear, 1.5, s.bath, OracleGrid{k_panels, mu_panels});
    };
    const auto coarse = at(2, 1);
    const auto medium = at(4, 2);
    const auto fine = at(8, 4);
    const auto reference = at(64, 8);
    const double e_coarse = std::abs(coarse - reference);
    const double e_medium = std::abs(medium - reference);
    const double e_fine = std::abs(fine - reference);
    const double floor = 1e-13 * std::abs(reference);
    CHECK((e_medium <= e_coarse / 4.0 || e_coarse < floor));
    CHECK((e_fine <= e_medium / 4.0 || e_medium < floor));
}

TEST_CASE("wightman invariants on random inputs") {
    gen::Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        const double v = rng.uniform(0.0, 0.99);
        const double radius = rng.uniform(0.1, 10.0);
        const double temperature = std::pow(10.0, rng.uniform(-3.0, 1.0));
        const double dtau = rng.uniform(0.0, 10.0);
        CAPTURE(v);
        CAPTURE(radius);
        CAPTURE(temperature);
        CAPTURE(dtau);
        const auto s = setup(v, radius, temperature);
        const WightmanValues w = wightman_values(s.traj, s.smear, s.bath, dtau, kQuad);
        CHECK(w.variance > 0.0);
        CHECK(w.re_w * w.re_w + w.im_w * w.im_w <= w.variance * w.variance * (1.0 + 1e-9));
        const double coincident = wightman_re(s.traj, s.smear, s.bath, 0.0, kQuad);
        CHECK(std::abs(coincident - w.variance) <= 10.0 * kQuad.rel_tol * w.variance);
    }
}

TEST_CASE("no seam at the small-speed threshold") {
    const double below = kSmallSpeedThreshold * (1.0 - 1e-12);
    for (double temperature : {0.01, 1.0}) {
        for (double dtau : {0.0, 0.7, 2.0}) {
            const auto series = setup(below, 1.0, temperature);
            const auto erf_form = setup(kSmallSpeedThreshold, 1.0, temperature);
            const auto a = wightman_values(series.traj, series.smear, series.bath, dtau, kQuad);
            const auto b = wightman_values(erf_form.traj, erf_form.smear, erf_form.bath, dtau, kQuad);
            CAPTURE(temperature);
            CAPTURE(dtau);
            CHECK(rel(a.variance, b.variance) < 1e-8);
            CHECK(rel(a.re_w, b.re_w) < 1e-8);
            if (dtau > 0.0) {
                CHECK(rel(a.im_w, b.im_w) < 1e-8);
            }
        }
    }
}

TEST_CASE("variance grows with temperature") {
    for (double v : {0.0, 0.4, 0.95}) {
        for (double radius : {0.5, 2.0}) {
            double previous = 0.0;
            for (double temperature : {0.0, 0.001, 0.01, 0.1, 0.5, 1.0, 3.0, 10.0}) {
                const auto s = setup(v, radius, temperature);
                const double variance = field_variance(s.traj, s.smear, s.bath, kQuad);
                CHECK(variance >= previous);
                previous = variance;
            }
        }
    }
}

TEST_CASE("variance does not depend on the kick time") {
    // The API has no time argument; the same call gives the same value.
    const auto s = setup(0.3, 1.0, 1.0);
    CHECK(field_variance(s.traj, s.smear, s.bath, kQuad) == field_variance(s.traj, s.smear, s.bath, kQuad));
}
