#pragma once

#include <optional>

namespace squeezeforce {

/// Second moments of the squeezed reservoir seen by the atom.
///
/// photon_number    N   mean photon number of the squeezed field
/// two_photon_corr  |M| magnitude of the anomalous correlation <b b>
/// phi                  squeezing phase (radians)
/// ideal                true when the moments saturate M^2 = N(N+1)
/// squeeze_factor   r   set when the params came from a squeeze factor
struct SqueezeParams {
    double photon_number = 0.0;
    double two_photon_corr = 0.0;
    double phi = 0.0;
    bool ideal = true;
    std::optional<double> squeeze_factor;

    /// Normalized total noise n = 1 + 2N (classical vacuum gives 1).
    double n() const { return 1.0 + 2.0 * photon_number; }
};

/// Quadrature decay rates of the atomic dipole, units of the natural rate.
/// gamma_x belongs to the stretched (noisy) quadrature, gamma_y to the
/// squeezed (quiet) one; ideal squeezing keeps gamma_x * gamma_y = 1/4.
struct DecayRates {
    double gamma_x = 0.5;
    double gamma_y = 0.5;
};

/// Result of checking |M| against the Heisenberg bound sqrt(N(N+1)).
struct MomentCheck {
    bool ok = true;
    double excess = 0.0; // two_photon_corr - sqrt(N(N+1)), positive when violated
};

/// Build ideal minimum-uncertainty moments from the squeeze factor r >= 0:
/// N = sinh^2 r, |M| = sinh r cosh r.
SqueezeParams squeeze_from_r(double r, double phi);

/// Build ideal moments from the noise-reduction degree s = 1 - e^{-2r},
/// i.e. the fractional suppression of the quiet quadrature, 0 <= s < 1.
SqueezeParams squeeze_from_degree(double degree, double phi);

/// Accept externally supplied (possibly non-ideal) moments after
/// validating N >= 0, |M| >= 0 and the bound M^2 <= N(N+1).
SqueezeParams squeeze_from_moments(double photon_number, double two_photon_corr,
                                   double phi);

/// Degree of squeezing s = 2(|M| - N) realized by the given moments;
/// equals 1 - e^{-2r} for ideal ones and 0 in the classical limit.
double squeeze_degree(const SqueezeParams& p);

/// Non-throwing bound check used by the factories and by callers that
/// want the magnitude of a violation.
MomentCheck validate_moments(double photon_number, double two_photon_corr);

/// Dipole decay rates gamma_{x,y} = N + 1/2 +- |M| in natural units.
DecayRates decay_rates(const SqueezeParams& p);

/// Frequency-resolved moments of a below-threshold degenerate parametric
/// oscillator, evaluated at detuning omega from the cavity line.
struct OpoMoments {
    double photon_number = 0.0;   // N(omega)
    double two_photon_corr = 0.0; // M(omega)
};

/// Cavity linewidth kappa > 0 and pump rate 0 <= epsilon < kappa/2.
class OpoConfig {
public:
    OpoConfig(double kappa, double epsilon);

    double kappa() const { return kappa_; }
    double epsilon() const { return epsilon_; }

private:
    double kappa_;
    double epsilon_;
};

/// Lorentzian output spectrum of the oscillator. The two moments satisfy
/// M(w)^2 = N(w) (N(w) + 1) identically at every frequency.
OpoMoments opo_spectrum(const OpoConfig& cfg, double omega);

} // namespace squeezeforce
