#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rational.hpp"
#include "squeezeforce/errors.hpp"
#include "squeezeforce/squeeze.hpp"

#include <cmath>
#include <random>

using namespace squeezeforce;
using testsupport::Rat;

TEST_CASE("no squeezing gives vacuum moments") {
    const SqueezeParams p = squeeze_from_r(0.0, 1.3);
    CHECK(p.photon_number == 0.0);
    CHECK(p.two_photon_corr == 0.0);
    CHECK(p.n() == 1.0);
    CHECK(p.ideal);
    REQUIRE(p.squeeze_factor.has_value());
    CHECK(*p.squeeze_factor == 0.0);
    const DecayRates g = decay_rates(p);
    CHECK(g.gamma_x == 0.5);
    CHECK(g.gamma_y == 0.5);
    CHECK(squeeze_degree(p) == 0.0);
}

TEST_CASE("moments at unit squeeze factor") {
    // sinh(1)^2, sinh(1)cosh(1) and the derived decay rates, high precision
    // reference values computed with 50-digit arithmetic.
    const SqueezeParams p = squeeze_from_r(1.0, 0.0);
    CHECK(p.photon_number == doctest::Approx(1.3810978455418157).epsilon(1e-15));
    CHECK(p.two_photon_corr == doctest::Approx(1.8134302039235094).epsilon(1e-15));
    const DecayRates g = decay_rates(p);
    CHECK(g.gamma_x == doctest::Approx(3.6945280494653251).epsilon(1e-15));
    CHECK(g.gamma_y == doctest::Approx(0.067667641618306346).epsilon(1e-13));
    CHECK(squeeze_degree(p) ==
          doctest::Approx(0.86466471676338731).epsilon(1e-13)); // 1 - e^-2
}

TEST_CASE("75 percent squeezing hits the quarter/three-quarter moments") {
    const SqueezeParams p = squeeze_from_degree(0.75, 0.4);
    REQUIRE(p.squeeze_factor.has_value());
    CHECK(*p.squeeze_factor ==
          doctest::Approx(0.69314718055994531).epsilon(1e-15)); // ln 2
    CHECK(p.photon_number == doctest::Approx(Rat(9, 16).value()).epsilon(1e-15));
    CHECK(p.two_photon_corr == doctest::Approx(Rat(15, 16).value()).epsilon(1e-15));
    const DecayRates g = decay_rates(p);
    CHECK(g.gamma_x == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(g.gamma_y == doctest::Approx(0.125).epsilon(1e-13));
    CHECK(p.phi == 0.4);
}

TEST_CASE("degree round-trips through the moments") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> deg(0.0, 0.999);
    for (int i = 0; i < 200; ++i) {
        const double s = deg(rng);
        const SqueezeParams p = squeeze_from_degree(s, 0.0);
        CHECK(squeeze_degree(p) == doctest::Approx(s).epsilon(1e-12));
    }
}

TEST_CASE("ideal squeezing keeps the decay-rate product at one quarter") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> rs(0.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const DecayRates g = decay_rates(squeeze_from_r(rs(rng), 0.0));
        CHECK(g.gamma_x * g.gamma_y == doctest::Approx(0.25).epsilon(1e-9));
    }
}

TEST_CASE("factory domain checks") {
    CHECK_THROWS_AS(squeeze_from_r(-0.1, 0.0), DomainError);
    CHECK_THROWS_AS(squeeze_from_degree(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(squeeze_from_degree(-0.01, 0.0), DomainError);
    CHECK_THROWS_AS(squeeze_from_moments(-1.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(squeeze_from_moments(1.0, -0.5, 0.0), DomainError);
}

TEST_CASE("moment bound validation") {
    const double at_bound = std::sqrt(2.0); // N = 1
    CHECK(validate_moments(1.0, at_bound).ok);
    CHECK(validate_moments(1.0, 0.3).ok);
    CHECK(validate_moments(1.0, 0.3).excess < 0.0);

    const MomentCheck bad = validate_moments(1.0, at_bound + 1e-6);
    CHECK_FALSE(bad.ok);
    CHECK(bad.excess > 9e-7);
    CHECK(bad.excess < 1.1e-6);
    CHECK_THROWS_AS(squeeze_from_moments(1.0, at_bound + 1e-6, 0.0),
                    MomentBoundError);
}

TEST_CASE("externally supplied moments keep their ideal flag honest") {
    const SqueezeParams ideal = squeeze_from_moments(9.0 / 16.0, 15.0 / 16.0, 0.2);
    CHECK(ideal.ideal);
    REQUIRE(ideal.squeeze_factor.has_value());
    CHECK(*ideal.squeeze_factor ==
          doctest::Approx(0.69314718055994531).epsilon(1e-12));

    const SqueezeParams thermal = squeeze_from_moments(1.0, 0.5, 0.2);
    CHECK_FALSE(thermal.ideal);
    CHECK_FALSE(thermal.squeeze_factor.has_value());
    CHECK(squeeze_degree(thermal) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("oscillator config validation") {
    CHECK_THROWS_AS(OpoConfig(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(OpoConfig(-1.0, 0.1), DomainError);
    CHECK_THROWS_AS(OpoConfig(2.0, -0.1), DomainError);
    CHECK_THROWS_AS(OpoConfig(2.0, 1.0), AboveThresholdError);
    CHECK_THROWS_AS(OpoConfig(2.0, 1.5), AboveThresholdError);
    CHECK_NOTHROW(OpoConfig(2.0, 0.999999));
    const OpoConfig ok(2.0, 0.5);
    CHECK(ok.kappa() == 2.0);
    CHECK(ok.epsilon() == 0.5);
}

TEST_CASE("oscillator spectrum at line center") {
    const OpoConfig cfg(2.0, 0.5);
    const OpoMoments m = opo_spectrum(cfg, 0.0);
    // lambda = 3/2, mu = 1/2, C = 1/2: N = (4 - 4/9)/2, M = (4 + 4/9)/2.
    CHECK(m.photon_number == doctest::Approx(Rat(16, 9).value()).epsilon(1e-14));
    CHECK(m.two_photon_corr == doctest::Approx(Rat(20, 9).value()).epsilon(1e-14));
}

TEST_CASE("oscillator spectrum saturates the moment bound everywhere") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> uk(0.1, 5.0);
    std::uniform_real_distribution<double> ue(1e-3, 0.999);
    std::uniform_real_distribution<double> uo(-10.0, 10.0);
    for (int i = 0; i < 300; ++i) {
        const double kappa = uk(rng);
        const double epsilon = ue(rng) * 0.5 * kappa;
        const OpoConfig cfg(kappa, epsilon);
        const OpoMoments m = opo_spectrum(cfg, uo(rng) * kappa);
        const double lhs = m.two_photon_corr * m.two_photon_corr;
        const double rhs = m.photon_number * (m.photon_number + 1.0);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * lhs);
    }
}

TEST_CASE("oscillator spectrum shape") {
    const OpoConfig cfg(1.0, 0.3);
    const OpoMoments center = opo_spectrum(cfg, 0.0);
    const OpoMoments wing = opo_spectrum(cfg, 2.0);
    const OpoMoments far = opo_spectrum(cfg, 20.0);
    CHECK(center.photon_number > wing.photon_number);
    CHECK(wing.photon_number > far.photon_number);
    CHECK(opo_spectrum(cfg, -2.0).photon_number == wing.photon_number);
    CHECK(opo_spectrum(cfg, -2.0).two_photon_corr == wing.two_photon_corr);

    // no pump, no output
    const OpoMoments off = opo_spectrum(OpoConfig(1.0, 0.0), 0.7);
    CHECK(off.photon_number == 0.0);
    CHECK(off.two_photon_corr == 0.0);
}
