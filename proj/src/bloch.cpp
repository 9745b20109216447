#include "squeezeforce/bloch.hpp"

#include "squeezeforce/errors.hpp"

#include <cmath>
#include <string>

namespace squeezeforce {

namespace detail {

double sigma_sc_value(double n, double m, double phi, double beta, double delta) {
    const double half_n = 0.5 * n;
    const double denom = n * (half_n * half_n + delta * delta - m * m) +
                         beta * beta * (half_n + m * std::cos(phi));
    if (!(denom > 0.0))
        throw DegenerateDenominatorError(
            "squeezed-coherent steady state denominator = " + std::to_string(denom));
    return beta * (delta + m * std::sin(phi)) / (2.0 * denom);
}

double sigma_svsc_value(double n, double m, double phi, double beta, double delta) {
    const double half_n = 0.5 * n;
    const double hm = half_n + m;
    const double denom = half_n * (beta * beta + 2.0 * delta * delta + hm * hm) +
                         beta * beta * m * std::cos(phi);
    if (!(denom > 0.0))
        throw DegenerateDenominatorError(
            "squeezed-vacuum-driven steady state denominator = " +
            std::to_string(denom));
    return 0.5 * beta * (delta + 2.0 * m * hm * std::sin(phi)) / denom;
}

} // namespace detail

double signed_corr(const SqueezeParams& squeeze, Quadrature quad) {
    return quad == Quadrature::Noisy ? squeeze.two_photon_corr
                                     : -squeeze.two_photon_corr;
}

double activation(const SqueezeParams& squeeze, const DriveParams& drive,
                  DriveConfig config) {
    const double m = signed_corr(squeeze, drive.quadrature);
    if (config == DriveConfig::SC)
        return drive.delta + m * std::sin(squeeze.phi);
    const double hm = 0.5 * squeeze.n() + m;
    return drive.delta + 2.0 * m * hm * std::sin(squeeze.phi);
}

BlochY steady_state_y(const SqueezeParams& squeeze, const DriveParams& drive,
                      DriveConfig config) {
    if (!(drive.beta >= 0.0))
        throw DomainError("drive strength must be >= 0, got " +
                          std::to_string(drive.beta));
    const double m = signed_corr(squeeze, drive.quadrature);
    const double v = config == DriveConfig::SC
                         ? detail::sigma_sc_value(squeeze.n(), m, squeeze.phi,
                                                  drive.beta, drive.delta)
                         : detail::sigma_svsc_value(squeeze.n(), m, squeeze.phi,
                                                    drive.beta, drive.delta);
    if (std::abs(v) > 1.0 + 1e-12)
        throw NumericalError("steady state left the Bloch sphere: |sigma_y| = " +
                             std::to_string(std::abs(v)));
    return BlochY{v, config};
}

} // namespace squeezeforce
