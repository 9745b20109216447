#include "squeezeforce/cli.hpp"

#include "squeezeforce/constants.hpp"
#include "squeezeforce/squeeze.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

namespace squeezeforce {

namespace {

double parse_number(std::string_view text) {
    double v = 0.0;
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(text.data(), last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw DomainError("not a number: '" + std::string(text) + "'");
    return v;
}

// Bind an option that accepts angles in radians or as multiples of pi.
void add_angle_option(CLI::App* cmd, const std::string& name, double& target,
                      const std::string& desc) {
    cmd->add_option_function<std::string>(
        name, [&target](const std::string& s) { target = parse_angle(s); }, desc);
}

void warn_if_outside_validity(const std::vector<double>& deltas) {
    for (const double d : deltas) {
        const DriveParams probe{0.0, d, Quadrature::Noisy};
        if (!probe.within_validity())
            std::cerr << "warning: detuning " << format_double(d)
                      << " is outside the weak-detuning window |delta| < 1; "
                         "the adiabatic steady state may not apply\n";
    }
}

void emit_fig1(const RunConfig& cfg, std::ostream& os) {
    if (cfg.deltas.empty())
        throw DomainError("fig1 needs at least one detuning");
    warn_if_outside_validity(cfg.deltas);
    std::vector<ForceRecord> rows;
    for (const double delta : cfg.deltas) {
        auto block = fig1_curves(delta, cfg.phi, cfg.degree, cfg.beta_axis,
                                 cfg.averaging, cfg.workers);
        rows.insert(rows.end(), block.begin(), block.end());
    }
    write_force_csv(os, rows, cfg.unit);
}

void emit_fig2(const RunConfig& cfg, std::ostream& os) {
    if (cfg.deltas.empty())
        throw DomainError("fig2 needs at least one detuning");
    warn_if_outside_validity(cfg.deltas);
    std::vector<ForceRecord> rows;
    for (const double delta : cfg.deltas) {
        auto block = fig2_surface(delta, cfg.beta, cfg.degree_axis, cfg.phi_count,
                                  cfg.averaging, cfg.workers);
        rows.insert(rows.end(), block.begin(), block.end());
    }
    write_force_csv(os, rows, cfg.unit);
}

void emit_sweep(const RunConfig& cfg, std::ostream& os) {
    warn_if_outside_validity(cfg.deltas);
    SweepGrid grid;
    grid.beta = cfg.sweep_beta_axis;
    grid.deltas = cfg.deltas;
    grid.phi = cfg.sweep_phi_axis;
    grid.degree = cfg.sweep_degree_axis;
    grid.configs = cfg.configs;
    grid.quadratures = cfg.quadratures;
    grid.averaging = cfg.averaging;
    write_force_csv(os, run_sweep(grid, cfg.workers), cfg.unit);
}

void emit_crossover(const RunConfig& cfg, std::ostream& os) {
    warn_if_outside_validity({cfg.delta});
    const SqueezeParams squeeze = squeeze_from_degree(cfg.degree, cfg.phi);
    const CrossoverResult res =
        find_crossover(squeeze, cfg.delta, cfg.beta_lo, cfg.beta_hi);
    os << "delta,phi,degree,beta_star,bracket_lo,bracket_hi,residual,iterations\n"
       << format_double(cfg.delta) << ',' << format_double(cfg.phi) << ','
       << format_double(cfg.degree) << ',' << format_double(res.beta_star) << ','
       << format_double(res.bracket_lo) << ',' << format_double(res.bracket_hi)
       << ',' << format_double(res.residual) << ',' << res.iterations << '\n';
}

void emit_opo_spectrum(const RunConfig& cfg, std::ostream& os) {
    const OpoConfig opo(cfg.kappa, cfg.epsilon);
    const AxisSpec axis{cfg.omega_min.value_or(-10.0 * cfg.kappa),
                        cfg.omega_max.value_or(10.0 * cfg.kappa), cfg.omega_count};
    os << "kappa,epsilon,omega,n_omega,m_omega\n";
    for (const double omega : axis_values(axis)) {
        const OpoMoments m = opo_spectrum(opo, omega);
        os << format_double(cfg.kappa) << ',' << format_double(cfg.epsilon) << ','
           << format_double(omega) << ',' << format_double(m.photon_number) << ','
           << format_double(m.two_photon_corr) << '\n';
    }
}

void emit_doppler(const RunConfig& cfg, std::ostream& os) {
    const double gamma = 2.0 * pi * cfg.gamma_hz;
    const double temperature = doppler_limit_temperature(gamma);
    os << "gamma_rad_per_s,t_doppler_kelvin\n"
       << format_double(gamma) << ',' << format_double(temperature) << '\n';
}

} // namespace

double parse_angle(std::string_view text) {
    if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") {
        const std::string_view head = text.substr(0, text.size() - 2);
        if (head.empty() || head == "+")
            return pi;
        if (head == "-")
            return -pi;
        return parse_number(head) * pi;
    }
    return parse_number(text);
}

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig cfg;

    CLI::App app{"Laser cooling forces on a two-level atom in squeezed light"};
    app.name("squeezeforce");
    app.set_version_flag("--version", "squeezeforce 1.0.0");
    app.set_config("--config", "", "Read options from a key = value file");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);

    app.add_option("-o,--output", cfg.output,
                   "Output CSV path; '-' writes to stdout")
        ->capture_default_str();
    app.add_option("-j,--workers", cfg.workers,
                   "Worker threads for sweeps; 0 picks one per hardware thread")
        ->envname("SQUEEZEFORCE_WORKERS")
        ->check(CLI::NonNegativeNumber);
    app.add_option_function<std::string>(
        "--unit",
        [&cfg](const std::string& s) { cfg.unit = parse_force_unit(s); },
        "Force unit for tables: half (hbar*k*gamma/2) or full (hbar*k*gamma)");
    app.add_option_function<std::string>(
        "--averaging",
        [&cfg](const std::string& s) { cfg.averaging = parse_averaging(s); },
        "Spatial reduction: abs-mean, quarter-period or peak-local");

    auto* fig1 = app.add_subcommand(
        "fig1", "Reduced force vs drive strength, three curves per detuning");
    fig1->fallthrough();
    fig1->callback([&cfg] { cfg.command = Command::Fig1; });
    fig1->add_option("--delta", cfg.deltas,
                     "Detunings, one curve block each (default: 0 0.1)");
    add_angle_option(fig1, "--phi", cfg.phi, "Squeezing phase (e.g. 0.8pi)");
    fig1->add_option("--degree", cfg.degree, "Degree of squeezing in [0, 1)")
        ->capture_default_str();
    fig1->add_option("--beta-min", cfg.beta_axis.min)->capture_default_str();
    fig1->add_option("--beta-max", cfg.beta_axis.max)->capture_default_str();
    fig1->add_option("--beta-count", cfg.beta_axis.count)->capture_default_str();

    auto* fig2 = app.add_subcommand(
        "fig2", "Signed force surface over squeezing phase and degree");
    fig2->fallthrough();
    fig2->callback([&cfg] { cfg.command = Command::Fig2; });
    fig2->add_option("--delta", cfg.deltas,
                     "Detunings, one surface block each (default: 0 0.1)");
    fig2->add_option("--beta", cfg.beta, "Drive strength at the antinode")
        ->capture_default_str();
    fig2->add_option("--degree-min", cfg.degree_axis.min)->capture_default_str();
    fig2->add_option("--degree-max", cfg.degree_axis.max)->capture_default_str();
    fig2->add_option("--degree-count", cfg.degree_axis.count)
        ->capture_default_str();
    fig2->add_option("--phi-count", cfg.phi_count,
                     "Points on the open phase grid [0, 2pi)")
        ->capture_default_str();

    auto* sweep = app.add_subcommand(
        "sweep", "Force magnitudes over a full cartesian parameter grid");
    sweep->fallthrough();
    sweep->callback([&cfg] { cfg.command = Command::Sweep; });
    sweep->add_option("--delta", cfg.deltas, "Detunings (default: 0)");
    sweep->add_option("--beta-min", cfg.sweep_beta_axis.min)
        ->capture_default_str();
    sweep->add_option("--beta-max", cfg.sweep_beta_axis.max)
        ->capture_default_str();
    sweep->add_option("--beta-count", cfg.sweep_beta_axis.count)
        ->capture_default_str();
    add_angle_option(sweep, "--phi-min", cfg.sweep_phi_axis.min,
                     "Squeezing phase axis start");
    add_angle_option(sweep, "--phi-max", cfg.sweep_phi_axis.max,
                     "Squeezing phase axis end");
    sweep->add_option("--phi-count", cfg.sweep_phi_axis.count)
        ->capture_default_str();
    sweep->add_option("--degree-min", cfg.sweep_degree_axis.min)
        ->capture_default_str();
    sweep->add_option("--degree-max", cfg.sweep_degree_axis.max)
        ->capture_default_str();
    sweep->add_option("--degree-count", cfg.sweep_degree_axis.count)
        ->capture_default_str();
    sweep->add_option_function<std::vector<std::string>>(
        "--configs",
        [&cfg](const std::vector<std::string>& items) {
            cfg.configs.clear();
            for (const auto& s : items)
                cfg.configs.push_back(parse_drive_config(s));
        },
        "Drive configurations to include: sc, svsc (default: both)");
    sweep->add_option_function<std::vector<std::string>>(
        "--quadratures",
        [&cfg](const std::vector<std::string>& items) {
            cfg.quadratures.clear();
            for (const auto& s : items)
                cfg.quadratures.push_back(parse_quadrature(s));
        },
        "Driven quadratures to include: noisy, quiet (default: both)");

    auto* crossover = app.add_subcommand(
        "crossover",
        "Drive strength where the squeezed-vacuum-driven force overtakes");
    crossover->fallthrough();
    crossover->callback([&cfg] { cfg.command = Command::Crossover; });
    crossover->add_option("--delta", cfg.delta, "Detuning")->capture_default_str();
    add_angle_option(crossover, "--phi", cfg.phi, "Squeezing phase (e.g. 0.8pi)");
    crossover->add_option("--degree", cfg.degree, "Degree of squeezing in [0, 1)")
        ->capture_default_str();
    crossover->add_option("--beta-lo", cfg.beta_lo, "Bracket start")
        ->capture_default_str();
    crossover->add_option("--beta-hi", cfg.beta_hi, "Bracket end")
        ->capture_default_str();

    auto* opo = app.add_subcommand(
        "opo-spectrum",
        "Frequency-resolved moments of a below-threshold parametric oscillator");
    opo->fallthrough();
    opo->callback([&cfg] { cfg.command = Command::OpoSpectrum; });
    opo->add_option("--kappa", cfg.kappa, "Cavity linewidth")->capture_default_str();
    opo->add_option("--epsilon", cfg.epsilon, "Pump rate, below kappa/2")
        ->capture_default_str();
    opo->add_option("--omega-min", cfg.omega_min,
                    "Frequency axis start (default: -10*kappa)");
    opo->add_option("--omega-max", cfg.omega_max,
                    "Frequency axis end (default: +10*kappa)");
    opo->add_option("--omega-count", cfg.omega_count)->capture_default_str();

    auto* doppler = app.add_subcommand(
        "doppler", "Doppler limit temperature for a natural linewidth");
    doppler->fallthrough();
    doppler->callback([&cfg] { cfg.command = Command::Doppler; });
    doppler->add_option("--gamma-hz", cfg.gamma_hz,
                        "Natural linewidth in Hz (cycles per second)")
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForVersion&) {
        throw HelpRequested{std::string(app.version()) + "\n"};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::CallForHelp&) {
        const auto picked = app.get_subcommands();
        throw HelpRequested{picked.empty() ? app.help() : picked.front()->help()};
    } catch (const CLI::FileError& e) {
        throw IoError(e.what());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }

    // Unset list options fall back to per-command defaults.
    if ((cfg.command == Command::Fig1 || cfg.command == Command::Fig2) &&
        cfg.deltas.empty())
        cfg.deltas = {0.0, 0.1};
    if (cfg.command == Command::Sweep) {
        if (cfg.deltas.empty())
            cfg.deltas = {0.0};
        if (cfg.configs.empty())
            cfg.configs = {DriveConfig::SC, DriveConfig::SVSC};
        if (cfg.quadratures.empty())
            cfg.quadratures = {Quadrature::Noisy, Quadrature::Quiet};
    }
    return cfg;
}

std::vector<std::string> render_args(const RunConfig& cfg) {
    std::vector<std::string> out;
    const auto push = [&out](std::string_view flag, std::string_view value) {
        out.push_back(std::string(flag) + "=" + std::string(value));
    };

    switch (cfg.command) {
    case Command::Fig1:
        out.emplace_back("fig1");
        break;
    case Command::Fig2:
        out.emplace_back("fig2");
        break;
    case Command::Sweep:
        out.emplace_back("sweep");
        break;
    case Command::Crossover:
        out.emplace_back("crossover");
        break;
    case Command::OpoSpectrum:
        out.emplace_back("opo-spectrum");
        break;
    case Command::Doppler:
        out.emplace_back("doppler");
        break;
    case Command::None:
        throw DomainError("cannot render a config without a command");
    }

    push("--output", cfg.output);
    push("--workers", std::to_string(cfg.workers));
    push("--unit", to_string(cfg.unit));
    push("--averaging", to_string(cfg.averaging));

    const auto push_axis = [&push](std::string_view stem, const AxisSpec& axis) {
        push(std::string(stem) + "-min", format_double(axis.min));
        push(std::string(stem) + "-max", format_double(axis.max));
        push(std::string(stem) + "-count", std::to_string(axis.count));
    };

    switch (cfg.command) {
    case Command::Fig1:
        for (const double d : cfg.deltas)
            push("--delta", format_double(d));
        push("--phi", format_double(cfg.phi));
        push("--degree", format_double(cfg.degree));
        push_axis("--beta", cfg.beta_axis);
        break;
    case Command::Fig2:
        for (const double d : cfg.deltas)
            push("--delta", format_double(d));
        push("--beta", format_double(cfg.beta));
        push_axis("--degree", cfg.degree_axis);
        push("--phi-count", std::to_string(cfg.phi_count));
        break;
    case Command::Sweep:
        for (const double d : cfg.deltas)
            push("--delta", format_double(d));
        push_axis("--beta", cfg.sweep_beta_axis);
        push_axis("--phi", cfg.sweep_phi_axis);
        push_axis("--degree", cfg.sweep_degree_axis);
        for (const DriveConfig c : cfg.configs)
            push("--configs", to_string(c));
        for (const Quadrature q : cfg.quadratures)
            push("--quadratures", to_string(q));
        break;
    case Command::Crossover:
        push("--delta", format_double(cfg.delta));
        push("--phi", format_double(cfg.phi));
        push("--degree", format_double(cfg.degree));
        push("--beta-lo", format_double(cfg.beta_lo));
        push("--beta-hi", format_double(cfg.beta_hi));
        break;
    case Command::OpoSpectrum:
        push("--kappa", format_double(cfg.kappa));
        push("--epsilon", format_double(cfg.epsilon));
        if (cfg.omega_min)
            push("--omega-min", format_double(*cfg.omega_min));
        if (cfg.omega_max)
            push("--omega-max", format_double(*cfg.omega_max));
        push("--omega-count", std::to_string(cfg.omega_count));
        break;
    case Command::Doppler:
        push("--gamma-hz", format_double(cfg.gamma_hz));
        break;
    case Command::None:
        break;
    }
    return out;
}

void execute(const RunConfig& cfg) {
    std::ostringstream body;
    switch (cfg.command) {
    case Command::Fig1:
        emit_fig1(cfg, body);
        break;
    case Command::Fig2:
        emit_fig2(cfg, body);
        break;
    case Command::Sweep:
        emit_sweep(cfg, body);
        break;
    case Command::Crossover:
        emit_crossover(cfg, body);
        break;
    case Command::OpoSpectrum:
        emit_opo_spectrum(cfg, body);
        break;
    case Command::Doppler:
        emit_doppler(cfg, body);
        break;
    case Command::None:
        throw DomainError("no command selected");
    }

    if (cfg.output == "-") {
        std::cout << body.str();
        std::cout.flush();
        if (!std::cout)
            throw IoError("writing to stdout failed");
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
    if (!file)
        throw IoError("cannot open '" + cfg.output + "' for writing");
    file << body.str();
    file.flush();
    if (!file)
        throw IoError("writing to '" + cfg.output + "' failed");
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    if (argc > 0)
        args.assign(argv + 1, argv + argc);
    try {
        const RunConfig cfg = parse_args(args);
        execute(cfg);
        return 0;
    } catch (const HelpRequested& h) {
        std::cout << h.text;
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace squeezeforce
