#include "squeezeforce/force.hpp"

#include "squeezeforce/errors.hpp"
#include "squeezeforce/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace squeezeforce {

namespace {

double raw_sigma(const SqueezeParams& squeeze, double m, DriveConfig config,
                 double beta, double delta) {
    return config == DriveConfig::SC
               ? detail::sigma_sc_value(squeeze.n(), m, squeeze.phi, beta, delta)
               : detail::sigma_svsc_value(squeeze.n(), m, squeeze.phi, beta, delta);
}

double local_force_impl(const SqueezeParams& squeeze, const DriveParams& drive,
                        DriveConfig config, double kx) {
    const double m = signed_corr(squeeze, drive.quadrature);
    const double beta_local = drive.beta * std::cos(kx);
    const double sigma = raw_sigma(squeeze, m, config, beta_local, drive.delta);
    if (std::abs(sigma) > 1.0 + 1e-12)
        throw NumericalError("local steady state left the Bloch sphere: |sigma_y| = " +
                             std::to_string(std::abs(sigma)));
    return -2.0 * drive.beta * std::sin(kx) * sigma;
}

void require_nonnegative_beta(const DriveParams& drive) {
    if (!(drive.beta >= 0.0))
        throw DomainError("drive strength must be >= 0, got " +
                          std::to_string(drive.beta));
}

double peak_local_force(const SqueezeParams& squeeze, const DriveParams& drive,
                        DriveConfig config) {
    const auto magnitude = [&](double u) {
        return std::abs(local_force_impl(squeeze, drive, config, u));
    };

    // Coarse scan of the first quarter period, then golden-section polish.
    constexpr int samples = 513;
    const double step = 0.5 * pi / (samples - 1);
    int best = 0;
    double best_val = magnitude(0.0);
    for (int i = 1; i < samples; ++i) {
        const double v = magnitude(step * i);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }

    double lo = step * std::max(best - 1, 0);
    double hi = step * std::min(best + 1, samples - 1);
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = hi - ratio * (hi - lo);
    double d = lo + ratio * (hi - lo);
    double fc = magnitude(c);
    double fd = magnitude(d);
    while (hi - lo > 1e-12) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - ratio * (hi - lo);
            fc = magnitude(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + ratio * (hi - lo);
            fd = magnitude(d);
        }
    }
    return std::max({best_val, fc, fd});
}

} // namespace

double local_force(const SqueezeParams& squeeze, const DriveParams& drive,
                   DriveConfig config, double kx) {
    require_nonnegative_beta(drive);
    return local_force_impl(squeeze, drive, config, kx);
}

double averaged_force(const SqueezeParams& squeeze, const DriveParams& drive,
                      DriveConfig config, AveragingMode mode, double rel_tol) {
    require_nonnegative_beta(drive);
    switch (mode) {
    case AveragingMode::AbsMean: {
        const auto integrand = [&](double u) {
            return std::abs(local_force_impl(squeeze, drive, config, u));
        };
        return integrate_adaptive(integrand, 0.0, pi, rel_tol).value / pi;
    }
    case AveragingMode::QuarterPeriod: {
        const auto integrand = [&](double u) {
            return local_force_impl(squeeze, drive, config, u);
        };
        const double v = integrate_adaptive(integrand, 0.0, 0.5 * pi, rel_tol).value;
        return std::abs(v) * 2.0 / pi;
    }
    case AveragingMode::PeakLocal:
        return peak_local_force(squeeze, drive, config);
    }
    throw DomainError("unknown averaging mode");
}

int cooling_sign(const SqueezeParams& squeeze, const DriveParams& drive,
                 DriveConfig config) {
    const double c = activation(squeeze, drive, config);
    return (c > 0.0) - (c < 0.0);
}

double convert_force_unit(double half_unit_value, ForceUnit unit) {
    return unit == ForceUnit::Half ? half_unit_value : 0.5 * half_unit_value;
}

double dimensional_force_scale(const FieldGeometry& geom, double gamma_rad_per_s) {
    if (!(gamma_rad_per_s > 0.0))
        throw DomainError("natural rate must be > 0, got " +
                          std::to_string(gamma_rad_per_s));
    return 0.5 * planck_reduced * geom.k() * gamma_rad_per_s;
}

double doppler_limit_temperature(double gamma_rad_per_s) {
    if (!(gamma_rad_per_s > 0.0))
        throw DomainError("natural rate must be > 0, got " +
                          std::to_string(gamma_rad_per_s));
    return planck_reduced * gamma_rad_per_s / (2.0 * boltzmann);
}

CrossoverResult find_crossover(const SqueezeParams& squeeze, double delta,
                               double beta_lo, double beta_hi) {
    if (!(beta_lo >= 0.0) || !(beta_hi > beta_lo))
        throw DomainError("crossover bracket must satisfy 0 <= lo < hi");

    // Tighter-than-default quadrature so the residual target is not
    // swamped by integration noise on forces of order one.
    constexpr double quad_tol = 1e-12;
    constexpr double root_tol = 1e-10;
    constexpr double flat_tol = 1e-13;

    int evals = 0;
    const auto diff = [&](double beta) {
        ++evals;
        const DriveParams d{beta, delta, Quadrature::Noisy};
        return averaged_force(squeeze, d, DriveConfig::SVSC, AveragingMode::AbsMean,
                              quad_tol) -
               averaged_force(squeeze, d, DriveConfig::SC, AveragingMode::AbsMean,
                              quad_tol);
    };

    double a = beta_lo;
    double b = beta_hi;
    double ga = diff(a);
    double gb = diff(b);

    if (std::abs(ga) <= flat_tol && std::abs(gb) <= flat_tol) {
        const double gm = diff(0.5 * (a + b));
        if (std::abs(gm) <= flat_tol)
            throw NoCrossoverError(
                "force difference vanishes across the whole bracket");
        throw NoCrossoverError("bracket endpoints carry no usable sign change");
    }
    if (std::abs(ga) <= root_tol)
        return CrossoverResult{a, beta_lo, beta_hi, std::abs(ga), evals};
    if (std::abs(gb) <= root_tol)
        return CrossoverResult{b, beta_lo, beta_hi, std::abs(gb), evals};
    if ((ga < 0.0) == (gb < 0.0))
        throw NoCrossoverError("no sign change on bracket: difference is " +
                               std::to_string(ga) + " at lo and " +
                               std::to_string(gb) + " at hi");

    // Secant from the two freshest points, falling back to bisection
    // whenever the proposed step leaves the current sign-change bracket.
    double x0 = a, f0 = ga;
    double x1 = b, f1 = gb;
    for (int it = 0; it < 100; ++it) {
        double x2 = 0.5 * (a + b);
        if (f1 != f0) {
            const double candidate = x1 - f1 * (x1 - x0) / (f1 - f0);
            if (candidate > a && candidate < b)
                x2 = candidate;
        }
        const double f2 = diff(x2);
        if (std::abs(f2) <= root_tol)
            return CrossoverResult{x2, beta_lo, beta_hi, std::abs(f2), evals};
        if ((f2 < 0.0) == (ga < 0.0)) {
            a = x2;
            ga = f2;
        } else {
            b = x2;
            gb = f2;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
        if (b - a <= 1e-15 * std::max(1.0, b))
            break;
    }
    throw NoCrossoverError("crossover refinement stalled before reaching the "
                           "residual target");
}

} // namespace squeezeforce
