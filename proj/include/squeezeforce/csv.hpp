#pragma once

#include "squeezeforce/force.hpp"
#include "squeezeforce/sweep.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace squeezeforce {

std::string_view to_string(DriveConfig config);
std::string_view to_string(Quadrature quad);
std::string_view to_string(AveragingMode mode);
std::string_view to_string(ForceUnit unit);

DriveConfig parse_drive_config(std::string_view token);
Quadrature parse_quadrature(std::string_view token);
AveragingMode parse_averaging(std::string_view token);
ForceUnit parse_force_unit(std::string_view token);

/// Shortest decimal string that round-trips the value; negative zero is
/// normalized to "0" so identical grids always serialize identically.
std::string format_double(double value);

inline constexpr std::string_view force_csv_header =
    "config,quadrature,degree,phi,delta,beta,averaging,force_unit,force";

/// Header plus one line per record; force column scaled to `unit`.
void write_force_csv(std::ostream& os, const std::vector<ForceRecord>& records,
                     ForceUnit unit);

} // namespace squeezeforce
