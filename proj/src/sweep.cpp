#include "squeezeforce/sweep.hpp"

#include "squeezeforce/constants.hpp"
#include "squeezeforce/errors.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace squeezeforce {

namespace {

constexpr std::size_t max_grid_records = 100'000'000;

void validate_axis(const AxisSpec& axis, const char* name) {
    if (axis.count == 0)
        throw DomainError(std::string(name) + " axis needs at least one point");
    if (axis.count == 1) {
        if (axis.min != axis.max)
            throw DomainError(std::string(name) +
                              " axis with one point needs min == max");
    } else if (!(axis.min < axis.max)) {
        throw DomainError(std::string(name) + " axis needs min < max");
    }
}

ForceRecord make_record(DriveConfig config, Quadrature quad, double degree,
                        double phi, double delta, double beta, AveragingMode mode,
                        bool signed_force) {
    const SqueezeParams squeeze = squeeze_from_degree(degree, phi);
    const DriveParams drive{beta, delta, quad};
    double f = averaged_force(squeeze, drive, config, mode);
    if (signed_force)
        f *= cooling_sign(squeeze, drive, config);
    return ForceRecord{config, quad, degree, phi, delta, beta, mode, f};
}

} // namespace

std::vector<double> axis_values(const AxisSpec& axis) {
    validate_axis(axis, "requested");
    std::vector<double> pts(axis.count);
    if (axis.count == 1) {
        pts[0] = axis.min;
        return pts;
    }
    const double span = axis.max - axis.min;
    for (std::size_t i = 0; i < axis.count; ++i)
        pts[i] = axis.min + span * static_cast<double>(i) /
                                static_cast<double>(axis.count - 1);
    pts.back() = axis.max;
    return pts;
}

int resolve_workers(int requested) {
    if (requested > 0)
        return requested;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

namespace detail {

void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t)>& body) {
    if (n == 0)
        return;
    const std::size_t w = std::min<std::size_t>(
        static_cast<std::size_t>(resolve_workers(workers)), n);
    if (w <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }

    std::mutex failure_mutex;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (std::size_t c = 0; c < w; ++c) {
        const std::size_t lo = n * c / w;
        const std::size_t hi = n * (c + 1) / w;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i)
                    body(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace detail

std::vector<ForceRecord> run_sweep(const SweepGrid& grid, int workers) {
    validate_axis(grid.beta, "beta");
    validate_axis(grid.phi, "phi");
    validate_axis(grid.degree, "degree");
    if (!(grid.beta.min >= 0.0))
        throw DomainError("beta axis must be non-negative");
    if (!(grid.degree.min >= 0.0 && grid.degree.max < 1.0))
        throw DomainError("degree axis must lie in [0, 1)");
    if (grid.deltas.empty())
        throw DomainError("sweep needs at least one detuning");
    if (grid.configs.empty() || grid.quadratures.empty())
        throw DomainError("sweep needs at least one config and one quadrature");

    const auto betas = axis_values(grid.beta);
    const auto phis = axis_values(grid.phi);
    const auto degrees = axis_values(grid.degree);
    const std::size_t nq = grid.quadratures.size();
    const std::size_t nc = grid.configs.size();
    const std::size_t inner = betas.size() * nc * nq;
    const std::size_t total =
        grid.deltas.size() * degrees.size() * phis.size() * inner;
    if (total > max_grid_records)
        throw DomainError("sweep grid has " + std::to_string(total) +
                          " records, above the 1e8 cap");

    std::vector<ForceRecord> out(total);
    detail::parallel_for(total, workers, [&](std::size_t i) {
        const std::size_t quad_i = i % nq;
        const std::size_t config_i = (i / nq) % nc;
        const std::size_t beta_i = (i / (nq * nc)) % betas.size();
        const std::size_t phi_i = (i / (nq * nc * betas.size())) % phis.size();
        const std::size_t degree_i =
            (i / (nq * nc * betas.size() * phis.size())) % degrees.size();
        const std::size_t delta_i = i / (nq * nc * betas.size() * phis.size() *
                                         degrees.size());
        out[i] = make_record(grid.configs[config_i], grid.quadratures[quad_i],
                             degrees[degree_i], phis[phi_i], grid.deltas[delta_i],
                             betas[beta_i], grid.averaging, false);
    });
    return out;
}

std::vector<ForceRecord> fig1_curves(double delta, double phi, double degree,
                                     const AxisSpec& beta_axis, AveragingMode mode,
                                     int workers) {
    validate_axis(beta_axis, "beta");
    if (!(beta_axis.min >= 0.0))
        throw DomainError("beta axis must be non-negative");
    const auto betas = axis_values(beta_axis);

    struct Curve {
        DriveConfig config;
        Quadrature quadrature;
    };
    // Legend order: solid, dotted, dashed.
    constexpr Curve curves[3] = {
        {DriveConfig::SVSC, Quadrature::Noisy},
        {DriveConfig::SVSC, Quadrature::Quiet},
        {DriveConfig::SC, Quadrature::Noisy},
    };

    std::vector<ForceRecord> out(betas.size() * 3);
    detail::parallel_for(out.size(), workers, [&](std::size_t i) {
        const Curve c = curves[i % 3];
        out[i] = make_record(c.config, c.quadrature, degree, phi, delta,
                             betas[i / 3], mode, false);
    });
    return out;
}

std::vector<ForceRecord> fig2_surface(double delta, double beta,
                                      const AxisSpec& degree_axis,
                                      std::size_t phi_count, AveragingMode mode,
                                      int workers) {
    validate_axis(degree_axis, "degree");
    if (!(degree_axis.min >= 0.0 && degree_axis.max < 1.0))
        throw DomainError("degree axis must lie in [0, 1)");
    if (phi_count == 0)
        throw DomainError("phase grid needs at least one point");
    if (!(beta >= 0.0))
        throw DomainError("drive strength must be >= 0");

    const auto degrees = axis_values(degree_axis);
    std::vector<ForceRecord> out(degrees.size() * phi_count);
    detail::parallel_for(out.size(), workers, [&](std::size_t i) {
        const std::size_t k = i % phi_count;
        const double phi =
            2.0 * pi * static_cast<double>(k) / static_cast<double>(phi_count);
        out[i] = make_record(DriveConfig::SVSC, Quadrature::Noisy,
                             degrees[i / phi_count], phi, delta, beta, mode, true);
    });
    return out;
}

} // namespace squeezeforce
