#pragma once

#include "squeezeforce/csv.hpp"
#include "squeezeforce/errors.hpp"
#include "squeezeforce/force.hpp"
#include "squeezeforce/sweep.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace squeezeforce {

enum class Command {
    None,
    Fig1,
    Fig2,
    Sweep,
    Crossover,
    OpoSpectrum,
    Doppler,
};

/// Fully resolved invocation; value-comparable so a parsed command line can
/// be checked against a rendered one. Fields outside the selected command
/// keep their defaults.
struct RunConfig {
    Command command = Command::None;
    std::string output = "-"; // "-" writes to stdout
    int workers = 0;          // 0 = one per hardware thread
    ForceUnit unit = ForceUnit::Half;
    AveragingMode averaging = AveragingMode::AbsMean;

    // fig1 / fig2 / sweep
    std::vector<double> deltas;

    // fig1 and crossover
    double phi = 0.8 * pi;
    double degree = 0.75;
    AxisSpec beta_axis{0.0, 20.0, 200};

    // fig2
    double beta = 10.0;
    AxisSpec degree_axis{0.0, 0.95, 96};
    std::size_t phi_count = 128;

    // sweep
    AxisSpec sweep_beta_axis{10.0, 10.0, 1};
    AxisSpec sweep_phi_axis{0.0, 0.0, 1};
    AxisSpec sweep_degree_axis{0.75, 0.75, 1};
    std::vector<DriveConfig> configs;
    std::vector<Quadrature> quadratures;

    // crossover
    double delta = 0.0;
    double beta_lo = 0.5;
    double beta_hi = 20.0;

    // opo-spectrum
    double kappa = 2.0;
    double epsilon = 0.5;
    std::optional<double> omega_min; // default -10*kappa
    std::optional<double> omega_max; // default +10*kappa
    std::size_t omega_count = 101;

    // doppler
    double gamma_hz = 5.22e6; // natural linewidth, cycles per second

    bool operator==(const RunConfig&) const = default;
};

/// Malformed command line (unknown flag, bad value, missing subcommand).
class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

/// Reading or writing an output/config file failed.
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

/// Raised by parse_args when the user asked for --help or --version;
/// carries the text to print. Not an error.
struct HelpRequested {
    std::string text;
};

/// Angles are plain radians ("2.5", "-0.3") or multiples of pi written
/// with a "pi" suffix ("0.8pi", "pi", "-0.5pi").
double parse_angle(std::string_view text);

/// Parse a full argument vector (without argv[0]). Throws UsageError on
/// bad input and HelpRequested for --help/--version.
RunConfig parse_args(const std::vector<std::string>& args);

/// Inverse of parse_args: an argument vector that parses back to exactly
/// the given config.
std::vector<std::string> render_args(const RunConfig& cfg);

/// Run the configured command and write its CSV to cfg.output.
void execute(const RunConfig& cfg);

/// Full program entry: parse, execute, map failures to exit codes
/// (0 ok, 2 usage, 3 i/o, 4 numerical).
int run_cli(int argc, const char* const* argv);

} // namespace squeezeforce
