// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <iostream>

#include "haarbeam/cli.hpp"

#include "haarbeam/array.hpp"
#include "haarbeam/haar.hpp"
#include "haarbeam/hardware.hpp"
#include "haarbeam/metrics.hpp"
#include "haarbeam/spectrum.hpp"
#include "writers_internal.hpp"

namespace haarbeam::cli {

namespace {

haar::HaarCoefficients resolve_coefficients(const RunConfig& config) {
    if (config.coeffs_path) {
        return coefficients_from_json_file(*config.coeffs_path);
    }
    const haar::SampleGrid grid = config.grid == "left" ? haar::SampleGrid::left_endpoint
                                                        : haar::SampleGrid::midpoint;
    return haar::hdwt_forward(haar::sample_sine(config.m, grid));
}

int resolved_q_max(const RunConfig& config, const haar::HaarCoefficients& coeffs) {
    return config.q_max > 0 ? config.q_max : 2 * coeffs.sample_count() + 2;
}

void run_synthesize(const RunConfig& config) {
    atomic_write(config.out, coefficients_to_json(resolve_coefficients(config)));
}

void run_spectrum(const RunConfig& config) {
    const haar::HaarCoefficients coeffs = resolve_coefficients(config);
    const int q_max = resolved_q_max(config, coeffs);
    const spectrum::PulseSpectrum pulse =
        spectrum::pulse_spectrum(coeffs, config.f0, {-q_max, q_max});
    atomic_write(config.out, spectrum_to_csv(pulse));
}

void run_pattern(const RunConfig& config) {
    const haar::HaarCoefficients coeffs = resolve_coefficients(config);
    const int q_max = resolved_q_max(config, coeffs);
    std::vector<int> q_list =
        config.q_list ? *config.q_list : array::default_q_list(coeffs.sample_count(), q_max);
    std::sort(q_list.begin(), q_list.end());
    q_list.erase(std::unique(q_list.begin(), q_list.end()), q_list.end());
    const array::SteeringConfig steering =
        array::steering_delays(config.theta0, config.elements, config.f0);
    const array::ArrayGeometry geometry = array::uniform_geometry(config.elements, config.spacing);
    const array::Pattern pattern =
        array::compute_pattern(coeffs, steering, geometry, q_list,
                               array::make_theta_grid(config.theta_step), config.max_threads);
    atomic_write(config.out, pattern_to_csv(pattern));
}

void run_metrics(const RunConfig& config) {
    const haar::HaarCoefficients coeffs = resolve_coefficients(config);
    const int q_max = resolved_q_max(config, coeffs);
    const spectrum::QRange range{-q_max, q_max};
    const metrics::HarmonicLevelReport levels = metrics::harmonic_levels(coeffs, range);
    const double peak_sr = metrics::peak_sideband_level(coeffs, range);
    const metrics::EfficiencyReport efficiency = metrics::efficiencies(coeffs, config.f0);
    atomic_write(config.out, metrics_to_json(coeffs.sample_count(), config.f0, peak_sr,
                                             efficiency, levels));
}

void run_schedule(const RunConfig& config) {
    const haar::HaarCoefficients coeffs = resolve_coefficients(config);
    const hardware::BfnPlan plan = hardware::plan_bfn(coeffs, config.f0);
    const array::SteeringConfig steering =
        array::steering_delays(config.theta0, config.elements, config.f0);
    const std::vector<hardware::SwitchSchedule> schedules =
        hardware::switching_schedule(plan, steering);
    atomic_write(config.out, schedule_to_json(plan, schedules));
}

void run_multibeam(const RunConfig& config) {
    const hardware::MultibeamPlan plan = hardware::multibeam_plan(
        config.theta_a, config.f0_a, config.theta_b, config.f0_b, config.elements);
    atomic_write(config.out, multibeam_to_json(plan));
    if (config.pattern_out) {
        const array::ArrayGeometry geometry =
            array::uniform_geometry(config.elements, config.spacing);
        const auto [beam_a, beam_b] = hardware::multibeam_patterns(
            plan, geometry, array::make_theta_grid(config.theta_step), config.max_threads);
        atomic_write(*config.pattern_out, multibeam_pattern_to_csv(beam_a, beam_b));
    }
}

}  // namespace

void run_command(const RunConfig& config) {
    switch (config.command) {
        case Command::synthesize: run_synthesize(config); return;
        case Command::spectrum: run_spectrum(config); return;
        case Command::pattern: run_pattern(config); return;
        case Command::metrics: run_metrics(config); return;
        case Command::schedule: run_schedule(config); return;
        case Command::multibeam: run_multibeam(config); return;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? argc - 1 : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    if (!args.empty() && (args[0] == "--help" || args[0] == "-h")) {
        std::cout << "usage: haarbeam <synthesize|spectrum|pattern|metrics|schedule|multibeam> "
                     "[options]\n"
                     "Run 'haarbeam <command> --help' for the command's options.\n";
        return kExitOk;
    }
    try {
        run_command(load_config(args));
        return kExitOk;
    } catch (const HelpShown&) {
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
}

}  // namespace haarbeam::cli
