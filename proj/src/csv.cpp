#include "squeezeforce/csv.hpp"

#include "squeezeforce/errors.hpp"

#include <array>
#include <charconv>
#include <ostream>

namespace squeezeforce {

std::string_view to_string(DriveConfig config) {
    return config == DriveConfig::SC ? "sc" : "svsc";
}

std::string_view to_string(Quadrature quad) {
    return quad == Quadrature::Noisy ? "noisy" : "quiet";
}

std::string_view to_string(AveragingMode mode) {
    switch (mode) {
    case AveragingMode::AbsMean:
        return "abs-mean";
    case AveragingMode::QuarterPeriod:
        return "quarter-period";
    case AveragingMode::PeakLocal:
        return "peak-local";
    }
    return "abs-mean";
}

std::string_view to_string(ForceUnit unit) {
    return unit == ForceUnit::Half ? "half" : "full";
}

DriveConfig parse_drive_config(std::string_view token) {
    if (token == "sc")
        return DriveConfig::SC;
    if (token == "svsc")
        return DriveConfig::SVSC;
    throw DomainError("unknown config '" + std::string(token) +
                      "' (expected sc or svsc)");
}

Quadrature parse_quadrature(std::string_view token) {
    if (token == "noisy")
        return Quadrature::Noisy;
    if (token == "quiet")
        return Quadrature::Quiet;
    throw DomainError("unknown quadrature '" + std::string(token) +
                      "' (expected noisy or quiet)");
}

AveragingMode parse_averaging(std::string_view token) {
    if (token == "abs-mean")
        return AveragingMode::AbsMean;
    if (token == "quarter-period")
        return AveragingMode::QuarterPeriod;
    if (token == "peak-local")
        return AveragingMode::PeakLocal;
    throw DomainError("unknown averaging mode '" + std::string(token) +
                      "' (expected abs-mean, quarter-period or peak-local)");
}

ForceUnit parse_force_unit(std::string_view token) {
    if (token == "half")
        return ForceUnit::Half;
    if (token == "full")
        return ForceUnit::Full;
    throw DomainError("unknown force unit '" + std::string(token) +
                      "' (expected half or full)");
}

std::string format_double(double value) {
    if (value == 0.0)
        value = 0.0; // strip the sign of -0
    std::array<char, 32> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

void write_force_csv(std::ostream& os, const std::vector<ForceRecord>& records,
                     ForceUnit unit) {
    os << force_csv_header << '\n';
    for (const ForceRecord& r : records) {
        os << to_string(r.config) << ',' << to_string(r.quadrature) << ','
           << format_double(r.degree) << ',' << format_double(r.phi) << ','
           << format_double(r.delta) << ',' << format_double(r.beta) << ','
           << to_string(r.averaging) << ',' << to_string(unit) << ','
           << format_double(convert_force_unit(r.force, unit)) << '\n';
    }
}

} // namespace squeezeforce
