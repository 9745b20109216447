#include "squeezeforce/squeeze.hpp"

#include "squeezeforce/errors.hpp"

#include <cmath>
#include <string>

namespace squeezeforce {

namespace {
constexpr double moment_tol = 1e-12; // absolute slack on the Heisenberg bound
}

SqueezeParams squeeze_from_r(double r, double phi) {
    if (!(r >= 0.0))
        throw DomainError("squeeze factor must be >= 0, got " + std::to_string(r));
    const double sh = std::sinh(r);
    const double ch = std::cosh(r);
    SqueezeParams p;
    p.photon_number = sh * sh;
    p.two_photon_corr = sh * ch;
    p.phi = phi;
    p.ideal = true;
    p.squeeze_factor = r;
    return p;
}

SqueezeParams squeeze_from_degree(double degree, double phi) {
    if (!(degree >= 0.0 && degree < 1.0))
        throw DomainError("squeezing degree must lie in [0, 1), got " +
                          std::to_string(degree));
    // s = 1 - e^{-2r}  =>  r = -log1p(-s)/2, exact to the last ulp near s = 0.
    const double r = -0.5 * std::log1p(-degree);
    return squeeze_from_r(r, phi);
}

MomentCheck validate_moments(double photon_number, double two_photon_corr) {
    MomentCheck chk;
    const double bound = std::sqrt(photon_number * (photon_number + 1.0));
    chk.excess = two_photon_corr - bound;
    chk.ok = chk.excess <= moment_tol;
    return chk;
}

SqueezeParams squeeze_from_moments(double photon_number, double two_photon_corr,
                                   double phi) {
    if (!(photon_number >= 0.0))
        throw DomainError("photon number must be >= 0, got " +
                          std::to_string(photon_number));
    if (!(two_photon_corr >= 0.0))
        throw DomainError("two-photon correlation magnitude must be >= 0, got " +
                          std::to_string(two_photon_corr));
    const MomentCheck chk = validate_moments(photon_number, two_photon_corr);
    if (!chk.ok)
        throw MomentBoundError("moments violate M^2 <= N(N+1) by " +
                               std::to_string(chk.excess));
    SqueezeParams p;
    p.photon_number = photon_number;
    p.two_photon_corr = two_photon_corr;
    p.phi = phi;
    // Treat anything within validation slack of the bound as minimum-uncertainty.
    p.ideal = std::abs(chk.excess) <= moment_tol;
    if (p.ideal)
        p.squeeze_factor = std::asinh(std::sqrt(photon_number));
    return p;
}

double squeeze_degree(const SqueezeParams& p) {
    return 2.0 * (p.two_photon_corr - p.photon_number);
}

DecayRates decay_rates(const SqueezeParams& p) {
    DecayRates g;
    g.gamma_x = p.photon_number + 0.5 + p.two_photon_corr;
    g.gamma_y = p.photon_number + 0.5 - p.two_photon_corr;
    return g;
}

OpoConfig::OpoConfig(double kappa, double epsilon) : kappa_(kappa), epsilon_(epsilon) {
    if (!(kappa > 0.0))
        throw DomainError("cavity linewidth must be > 0, got " + std::to_string(kappa));
    if (!(epsilon >= 0.0))
        throw DomainError("pump rate must be >= 0, got " + std::to_string(epsilon));
    if (!(epsilon < 0.5 * kappa))
        throw AboveThresholdError("pump rate " + std::to_string(epsilon) +
                                  " is at or above threshold kappa/2 = " +
                                  std::to_string(0.5 * kappa));
}

OpoMoments opo_spectrum(const OpoConfig& cfg, double omega) {
    const double lambda_opo = 0.5 * cfg.kappa() + cfg.epsilon();
    const double mu = 0.5 * cfg.kappa() - cfg.epsilon();
    // N = c*(a - b) with c = kappa*epsilon/2 in the usual writing; the
    // difference a - b = 2*kappa*epsilon*a*b cancels catastrophically at
    // small pump, so both moments are evaluated in pure product form. The
    // products also make M^2 = N(N+1) hold to a few ulps at every frequency.
    const double c = 0.5 * cfg.kappa() * cfg.epsilon();
    const double a = 1.0 / (omega * omega + mu * mu);
    const double b = 1.0 / (omega * omega + lambda_opo * lambda_opo);
    OpoMoments m;
    m.photon_number = (cfg.kappa() * cfg.epsilon()) * (cfg.kappa() * cfg.epsilon()) * a * b;
    m.two_photon_corr = c * (a + b);
    return m;
}

} // namespace squeezeforce
