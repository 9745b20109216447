#pragma once

#include "squeezeforce/squeeze.hpp"

namespace squeezeforce {

/// Which dipole quadrature the classical drive addresses.
enum class Quadrature {
    Noisy, // stretched quadrature, decay rate gamma_x
    Quiet, // squeezed quadrature, decay rate gamma_y
};

/// Which reservoir drives the in-phase dipole component.
enum class DriveConfig {
    SC,   // squeezed-coherent: ordinary vacuum damping of the driven dipole
    SVSC, // squeezed vacuum additionally couples to the driven dipole
};

/// Classical driving field parameters in natural (decay-rate) units.
struct DriveParams {
    double beta = 0.0;  // Rabi frequency / natural rate, >= 0
    double delta = 0.0; // detuning / natural rate
    Quadrature quadrature = Quadrature::Noisy;

    /// The adiabatic elimination behind the steady state assumes the
    /// detuning stays well inside the natural line.
    bool within_validity() const { return delta > -1.0 && delta < 1.0; }
};

/// Steady-state out-of-phase dipole component; bounded by |value| <= 1.
struct BlochY {
    double value = 0.0;
    DriveConfig config = DriveConfig::SC;
};

/// Signed two-photon correlation seen by the driven dipole: +|M| when the
/// drive addresses the noisy quadrature, -|M| for the quiet one.
double signed_corr(const SqueezeParams& squeeze, Quadrature quad);

/// Numerator activation delta + (squeezing term); its sign decides whether
/// the averaged force damps or heats, and it vanishes identically in the
/// classical resonant case.
double activation(const SqueezeParams& squeeze, const DriveParams& drive,
                  DriveConfig config);

/// Steady-state <sigma_Y> of the optical Bloch equations for the requested
/// reservoir configuration. Throws NumericalError when the result escapes
/// the Bloch sphere beyond rounding slack.
BlochY steady_state_y(const SqueezeParams& squeeze, const DriveParams& drive,
                      DriveConfig config);

namespace detail {

// Raw evaluators on signed m; beta may be negative (the travelling-wave
// decomposition of a standing wave flips its sign every half wavelength).
// Both throw DegenerateDenominatorError if the denominator is not positive,
// which validated moments can never trigger.
double sigma_sc_value(double n, double m, double phi, double beta, double delta);
double sigma_svsc_value(double n, double m, double phi, double beta, double delta);

} // namespace detail

} // namespace squeezeforce
