#pragma once

#include "squeezeforce/bloch.hpp"
#include "squeezeforce/constants.hpp"
#include "squeezeforce/squeeze.hpp"

namespace squeezeforce {

/// Standing-wave geometry; only enters when converting to SI forces.
struct FieldGeometry {
    double wavelength = default_wavelength; // m

    double k() const { return 2.0 * pi / wavelength; }
};

/// How the position-dependent force is reduced to one number per drive.
enum class AveragingMode {
    AbsMean,       // mean of |F(kx)| over a full spatial period
    QuarterPeriod, // |mean of F(kx)| over the first quarter period
    PeakLocal,     // largest |F(kx)| over the first quarter period
};

/// Reporting unit for force columns; Half is the natural scale hbar*k*gamma/2.
enum class ForceUnit {
    Half,
    Full, // hbar*k*gamma; exactly half the Half-unit value
};

/// Dimensionless local force at phase kx along the standing wave, in units
/// of hbar*k*gamma/2. drive.beta is the antinode drive strength; the local
/// strength is its cosine profile. The gradient-of-phase singularity at the
/// nodes cancels against the dipole there, so the expression below is
/// finite everywhere and vanishes at both node and antinode.
double local_force(const SqueezeParams& squeeze, const DriveParams& drive,
                   DriveConfig config, double kx);

/// Spatially reduced force magnitude (always >= 0) in hbar*k*gamma/2 units.
/// rel_tol controls the adaptive quadrature behind the averaging modes.
double averaged_force(const SqueezeParams& squeeze, const DriveParams& drive,
                      DriveConfig config, AveragingMode mode,
                      double rel_tol = 1e-9);

/// -1, 0 or +1: the sign of the numerator activation, i.e. whether the
/// reduced force damps (+1) or heats (-1) the atomic motion.
int cooling_sign(const SqueezeParams& squeeze, const DriveParams& drive,
                 DriveConfig config);

/// Scale a Half-unit force value to the requested reporting unit.
double convert_force_unit(double half_unit_value, ForceUnit unit);

/// SI value of the natural force unit hbar*k*gamma/2, in newtons.
double dimensional_force_scale(const FieldGeometry& geom, double gamma_rad_per_s);

/// Doppler cooling limit k_B T = hbar*gamma/2 for natural linewidth gamma
/// in rad/s; returns kelvin.
double doppler_limit_temperature(double gamma_rad_per_s);

/// Drive strength at which the squeezed-vacuum-driven force overtakes the
/// plain squeezed-coherent one (both on the noisy quadrature, AbsMean).
struct CrossoverResult {
    double beta_star = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double residual = 0.0; // |force difference| at beta_star
    int iterations = 0;
};

/// Locate the crossover inside [beta_lo, beta_hi] by secant iteration with
/// a bisection safeguard. Throws NoCrossoverError when the difference has
/// no sign change on the bracket or vanishes identically on it.
CrossoverResult find_crossover(const SqueezeParams& squeeze, double delta,
                               double beta_lo, double beta_hi);

} // namespace squeezeforce
