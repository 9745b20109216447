#pragma once

#include "squeezeforce/bloch.hpp"
#include "squeezeforce/force.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace squeezeforce {

/// Closed uniformly spaced axis; count == 1 pins the axis to a single
/// value and requires min == max.
struct AxisSpec {
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 1;

    bool operator==(const AxisSpec&) const = default;
};

/// One reduced-force table entry. force is stored in the natural
/// hbar*k*gamma/2 unit; reporting units are applied at serialization time.
struct ForceRecord {
    DriveConfig config = DriveConfig::SC;
    Quadrature quadrature = Quadrature::Noisy;
    double degree = 0.0;
    double phi = 0.0;
    double delta = 0.0;
    double beta = 0.0;
    AveragingMode averaging = AveragingMode::AbsMean;
    double force = 0.0;
};

/// Cartesian sweep request. Row order of the result is fixed: delta, then
/// degree, then phi, then beta, then config, then quadrature, innermost
/// last; every axis ascending in its listed order.
struct SweepGrid {
    AxisSpec beta;
    std::vector<double> deltas{0.0};
    AxisSpec phi;
    AxisSpec degree;
    std::vector<DriveConfig> configs{DriveConfig::SC, DriveConfig::SVSC};
    std::vector<Quadrature> quadratures{Quadrature::Noisy, Quadrature::Quiet};
    AveragingMode averaging = AveragingMode::AbsMean;
};

/// Points of a closed axis; exact endpoints, interior points by the
/// lo + (hi-lo)*i/(count-1) rule.
std::vector<double> axis_values(const AxisSpec& axis);

/// Worker-count resolution: positive requests pass through, anything else
/// means one worker per hardware thread (at least one).
int resolve_workers(int requested);

/// Force-magnitude table over the full grid; throws DomainError on
/// malformed axes or when the grid exceeds 1e8 records. The result is
/// bit-identical for every worker count.
std::vector<ForceRecord> run_sweep(const SweepGrid& grid, int workers = 0);

/// Drive-strength curves of the first reference figure at one detuning:
/// for each beta (ascending) three rows in legend order, the
/// squeezed-vacuum-driven noisy curve, its quiet counterpart, and the
/// plain squeezed-coherent noisy curve. All rows are magnitudes.
std::vector<ForceRecord> fig1_curves(double delta, double phi, double degree,
                                     const AxisSpec& beta_axis, AveragingMode mode,
                                     int workers = 0);

/// Phase/degree surface of the second reference figure at one detuning:
/// squeezed-vacuum-driven noisy-quadrature force, degree rows outer
/// (closed axis) and phi columns inner on the open grid
/// phi_k = 2*pi*k/phi_count, k = 0..phi_count-1. Rows carry the signed
/// force, magnitude times cooling_sign, so the surface is odd in phi.
std::vector<ForceRecord> fig2_surface(double delta, double beta,
                                      const AxisSpec& degree_axis,
                                      std::size_t phi_count, AveragingMode mode,
                                      int workers = 0);

namespace detail {

/// Run body(i) for i in [0, n) across contiguous index chunks, one chunk
/// per worker. Exceptions from workers are rethrown on the caller thread.
void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& body);

} // namespace detail

} // namespace squeezeforce
