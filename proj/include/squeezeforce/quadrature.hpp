#pragma once

#include "squeezeforce/errors.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

namespace squeezeforce {

/// Outcome of integrate_adaptive.
struct QuadratureResult {
    double value = 0.0;
    double rel_error = 0.0; // relative change on the accepted doubling step
    int refinements = 0;    // accepted estimate used 2^refinements panels
};

namespace detail {

// 15-point Kronrod rule (extension of 7-point Gauss), positive half.
inline constexpr std::array<double, 8> kronrod15_nodes = {
    0.99145537112081263921,
    0.94910791234275852453,
    0.86486442335976907279,
    0.74153118559939443986,
    0.58608723546769113029,
    0.40584515137739716691,
    0.20778495500789846760,
    0.0,
};

inline constexpr std::array<double, 8> kronrod15_weights = {
    0.022935322010529224964,
    0.063092092629978553291,
    0.104790010322250183840,
    0.140653259715525918745,
    0.169004726639267902827,
    0.190350578064785409914,
    0.204432940075298892414,
    0.209482141084727828013,
};

template <typename F>
double kronrod15_panel(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = kronrod15_weights[7] * f(mid);
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kronrod15_nodes[i];
        acc += kronrod15_weights[i] * (f(mid - dx) + f(mid + dx));
    }
    return acc * half;
}

} // namespace detail

/// Integrate f over [a, b] with a composite 15-point Kronrod rule under
/// panel doubling: accept the 2^j-panel estimate once it differs from the
/// 2^{j-1}-panel one by at most rel_tol in relative terms (or by abs_tol
/// absolutely, for integrals that cancel to nearly zero). Deterministic:
/// fixed evaluation points and summation order for a given refinement level.
template <typename F>
QuadratureResult integrate_adaptive(F&& f, double a, double b,
                                    double rel_tol = 1e-9, double abs_tol = 0.0,
                                    int max_refinements = 16) {
    double prev = 0.0;
    double best_rel = HUGE_VAL;
    for (int j = 0; j <= max_refinements; ++j) {
        const std::size_t panels = std::size_t{1} << j;
        const double width = (b - a) / static_cast<double>(panels);
        double sum = 0.0;
        for (std::size_t p = 0; p < panels; ++p) {
            const double lo = a + width * static_cast<double>(p);
            const double hi = (p + 1 == panels) ? b : lo + width;
            sum += detail::kronrod15_panel(f, lo, hi);
        }
        if (j > 0) {
            const double diff = std::abs(sum - prev);
            const double rel = diff == 0.0 ? 0.0 : diff / std::abs(sum);
            if (diff <= rel_tol * std::abs(sum) || diff <= abs_tol)
                return QuadratureResult{sum, rel, j};
            if (rel < best_rel)
                best_rel = rel;
        }
        prev = sum;
    }
    throw QuadratureError("integral did not settle within " +
                              std::to_string(std::size_t{1} << max_refinements) +
                              " panels",
                          best_rel);
}

} // namespace squeezeforce
