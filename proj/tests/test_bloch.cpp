#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rational.hpp"
#include "squeezeforce/bloch.hpp"
#include "squeezeforce/errors.hpp"
#include "squeezeforce/squeeze.hpp"

#include <cmath>
#include <random>

using namespace squeezeforce;
using testsupport::Rat;

namespace {

const double half_pi = 2.0 * std::atan(1.0);

SqueezeParams worked_point() {
    return squeeze_from_moments(Rat(9, 16).value(), Rat(15, 16).value(), half_pi);
}

} // namespace

TEST_CASE("signed correlation follows the driven quadrature") {
    const SqueezeParams p = squeeze_from_degree(0.6, 0.0);
    CHECK(signed_corr(p, Quadrature::Noisy) == p.two_photon_corr);
    CHECK(signed_corr(p, Quadrature::Quiet) == -p.two_photon_corr);
}

TEST_CASE("steady state at the worked squeezing point") {
    const SqueezeParams p = worked_point();
    const DriveParams drive{1.0, 0.0, Quadrature::Noisy};
    const BlochY sc = steady_state_y(p, drive, DriveConfig::SC);
    const BlochY sv = steady_state_y(p, drive, DriveConfig::SVSC);
    CHECK(sc.config == DriveConfig::SC);
    CHECK(sv.config == DriveConfig::SVSC);
    // by hand: denominators 51/32 and 85/16 at this point
    CHECK(std::abs(sc.value - Rat(5, 17).value()) < 1e-15);
    CHECK(std::abs(sv.value - Rat(6, 17).value()) < 1e-15);
}

TEST_CASE("without squeezing the driven dipole is the saturation curve") {
    const SqueezeParams vac = squeeze_from_degree(0.0, 0.0);
    for (double beta : {0.1, 0.5, 1.0, 3.0, 10.0}) {
        for (double delta : {-0.5, -0.1, 0.2, 0.5}) {
            const DriveParams d{beta, delta, Quadrature::Noisy};
            const double expected =
                beta * delta / (beta * beta + 2.0 * delta * delta + 0.5);
            CHECK(steady_state_y(vac, d, DriveConfig::SC).value ==
                  doctest::Approx(expected).epsilon(1e-15));
        }
    }
    // resonant drive: no out-of-phase component at all
    const DriveParams resonant{2.0, 0.0, Quadrature::Noisy};
    CHECK(steady_state_y(vac, resonant, DriveConfig::SC).value == 0.0);
    CHECK(steady_state_y(vac, resonant, DriveConfig::SVSC).value == 0.0);
    // and the classic quarter-amplitude point
    const DriveParams quarter{1.0, 0.5, Quadrature::Noisy};
    CHECK(steady_state_y(vac, quarter, DriveConfig::SC).value == 0.25);
}

TEST_CASE("vacuum-driven configuration keeps its narrowed classical denominator") {
    // When the reservoir coupling is removed (no squeezing) the
    // vacuum-driven-dipole equations reduce to beta*delta over
    // beta^2 + 2*delta^2 + 1/4: the power-broadening constant stays at the
    // single-quadrature value 1/4 instead of the two-quadrature 1/2.
    const SqueezeParams vac = squeeze_from_degree(0.0, 0.0);
    for (double beta : {0.3, 1.0, 4.0}) {
        for (double delta : {-0.4, 0.1, 0.5}) {
            const DriveParams d{beta, delta, Quadrature::Quiet};
            const double expected =
                beta * delta / (beta * beta + 2.0 * delta * delta + 0.25);
            CHECK(steady_state_y(vac, d, DriveConfig::SVSC).value ==
                  doctest::Approx(expected).epsilon(1e-15));
        }
    }
    const DriveParams quarter{1.0, 0.5, Quadrature::Noisy};
    CHECK(steady_state_y(vac, quarter, DriveConfig::SVSC).value ==
          doctest::Approx(Rat(2, 7).value()).epsilon(1e-15));
}

TEST_CASE("steady state is odd in the drive amplitude") {
    std::mt19937 rng(4243);
    std::uniform_real_distribution<double> ur(0.0, 2.0);
    std::uniform_real_distribution<double> uphi(-3.2, 3.2);
    std::uniform_real_distribution<double> ubeta(0.0, 15.0);
    std::uniform_real_distribution<double> udelta(-0.9, 0.9);
    for (int i = 0; i < 300; ++i) {
        const SqueezeParams p = squeeze_from_r(ur(rng), uphi(rng));
        const double beta = ubeta(rng);
        const double delta = udelta(rng);
        for (const double m :
             {signed_corr(p, Quadrature::Noisy), signed_corr(p, Quadrature::Quiet)}) {
            const double plus = detail::sigma_sc_value(p.n(), m, p.phi, beta, delta);
            const double minus =
                detail::sigma_sc_value(p.n(), m, p.phi, -beta, delta);
            CHECK(plus == -minus);
            const double vplus =
                detail::sigma_svsc_value(p.n(), m, p.phi, beta, delta);
            const double vminus =
                detail::sigma_svsc_value(p.n(), m, p.phi, -beta, delta);
            CHECK(vplus == -vminus);
        }
    }
}

TEST_CASE("steady state never leaves the Bloch sphere") {
    std::mt19937 rng(1827);
    std::uniform_real_distribution<double> ur(0.0, 2.5);
    std::uniform_real_distribution<double> uphi(-6.3, 6.3);
    std::uniform_real_distribution<double> ubeta(0.0, 25.0);
    std::uniform_real_distribution<double> udelta(-0.95, 0.95);
    for (int i = 0; i < 500; ++i) {
        const SqueezeParams p = squeeze_from_r(ur(rng), uphi(rng));
        const DriveParams d{ubeta(rng), udelta(rng),
                            i % 2 == 0 ? Quadrature::Noisy : Quadrature::Quiet};
        for (const DriveConfig c : {DriveConfig::SC, DriveConfig::SVSC}) {
            const BlochY y = steady_state_y(p, d, c);
            CHECK(std::abs(y.value) <= 1.0);
        }
    }
}

TEST_CASE("quiet drive equals a noisy drive with negated correlation") {
    const SqueezeParams p = squeeze_from_degree(0.5, 1.1);
    const DriveParams quiet{3.0, 0.2, Quadrature::Quiet};
    const BlochY y = steady_state_y(p, quiet, DriveConfig::SC);
    const double direct = detail::sigma_sc_value(p.n(), -p.two_photon_corr, p.phi,
                                                 3.0, 0.2);
    CHECK(y.value == direct);
}

TEST_CASE("activation term") {
    const SqueezeParams p = squeeze_from_degree(0.75, half_pi);
    const double m = p.two_photon_corr;
    const DriveParams noisy{1.0, 0.3, Quadrature::Noisy};
    CHECK(activation(p, noisy, DriveConfig::SC) ==
          doctest::Approx(0.3 + m).epsilon(1e-15));
    const double hm = 0.5 * p.n() + m;
    CHECK(activation(p, noisy, DriveConfig::SVSC) ==
          doctest::Approx(0.3 + 2.0 * m * hm).epsilon(1e-15));

    const DriveParams quiet{1.0, 0.3, Quadrature::Quiet};
    CHECK(activation(p, quiet, DriveConfig::SC) ==
          doctest::Approx(0.3 - m).epsilon(1e-15));

    // resonant, unsqueezed: nothing activates the out-of-phase dipole
    const SqueezeParams vac = squeeze_from_degree(0.0, 0.7);
    const DriveParams resonant{1.0, 0.0, Quadrature::Noisy};
    CHECK(activation(vac, resonant, DriveConfig::SC) == 0.0);
    CHECK(activation(vac, resonant, DriveConfig::SVSC) == 0.0);
}

TEST_CASE("drive validation") {
    const SqueezeParams p = squeeze_from_degree(0.3, 0.0);
    const DriveParams bad{-1.0, 0.0, Quadrature::Noisy};
    CHECK_THROWS_AS(steady_state_y(p, bad, DriveConfig::SC), DomainError);

    CHECK(DriveParams{1.0, 0.5, Quadrature::Noisy}.within_validity());
    CHECK_FALSE(DriveParams{1.0, 1.0, Quadrature::Noisy}.within_validity());
    CHECK_FALSE(DriveParams{1.0, -1.5, Quadrature::Noisy}.within_validity());
}

TEST_CASE("degenerate denominators are rejected, not divided by") {
    // Raw evaluators only; every validated parameter set keeps the
    // denominators strictly positive, so exotic correlations are needed.
    CHECK_THROWS_AS(detail::sigma_sc_value(1.0, 5.0, 0.0, 0.0, 0.0),
                    DegenerateDenominatorError);
    CHECK_THROWS_AS(detail::sigma_svsc_value(1.0, -10.0, 0.0, 3.0, 0.0),
                    DegenerateDenominatorError);
}
