#pragma once

// Independent integration oracle for the tests: a fixed-order composite
// 20-point Gauss-Legendre rule. Shares no code or nodes with the library's
// adaptive Kronrod integrator.

#include <array>
#include <cstddef>

namespace testsupport {

inline constexpr std::array<double, 10> gl20_nodes = {
    0.0765265211334973, 0.2277858511416451, 0.3737060887154195,
    0.5108670019508271, 0.6360536807265150, 0.7463319064601508,
    0.8391169718222188, 0.9122344282513259, 0.9639719272779138,
    0.9931285991850949,
};

inline constexpr std::array<double, 10> gl20_weights = {
    0.1527533871307258, 0.1491729864726037, 0.1420961093183820,
    0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
    0.0832767415767048, 0.0626720483341091, 0.0406014298003869,
    0.0176140071391521,
};

template <typename F>
double gl20_composite(F&& f, double a, double b, std::size_t panels) {
    const double width = (b - a) / static_cast<double>(panels);
    double total = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = a + width * (static_cast<double>(p) + 0.5);
        const double half = 0.5 * width;
        double acc = 0.0;
        for (std::size_t i = 0; i < gl20_nodes.size(); ++i) {
            const double dx = half * gl20_nodes[i];
            acc += gl20_weights[i] * (f(mid - dx) + f(mid + dx));
        }
        total += acc * half;
    }
    return total;
}

} // namespace testsupport
