// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: config ingestion, command dispatch, and CSV/JSON
// emission of coefficients, spectra, patterns, metrics, and schedules.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace haarbeam::cli {

// Exit codes: 0 success, 2 config error, 3 numerical-domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitDomainError = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown after help text has been printed; maps to a zero exit.
struct HelpShown {};

enum class Command {
    synthesize,
    spectrum,
    pattern,
    metrics,
    schedule,
    multibeam,
};

/// Fully defaulted and validated run configuration.  Flags mirror the flat
/// JSON config keys one-to-one (dashes in flags, underscores in keys).
struct RunConfig {
    Command command = Command::synthesize;
    int m = 0;
    std::string waveform = "sine";
    std::string grid = "midpoint";
    std::optional<std::string> coeffs_path;
    int elements = 16;
    double spacing = 0.5;
    double theta0 = 90.0;
    double f0 = 1.0e6;
    int q_max = 0;  // 0: default 2M+2, resolved after coefficients are known
    std::optional<std::vector<int>> q_list;
    double theta_step = 0.1;
    double theta_a = 0.0;
    double f0_a = 1.0e6;
    double theta_b = 0.0;
    double f0_b = 0.0;  // 0: default 4 * f0_a
    std::string out;
    std::optional<std::string> pattern_out;
    int max_threads = 0;  // from TMA_THREADS; 0 = hardware default
};

/// Parses argv (and an optional --config JSON file; flags override file
/// values), validates against the command's preconditions, and returns the
/// resolved config.  Throws ConfigError on any problem.
RunConfig load_config(const std::vector<std::string>& args);

/// Executes one validated command, writing its output files atomically.
/// Throws std::domain_error for numerical-domain failures.
void run_command(const RunConfig& config);

/// Entry point used by main(): parse, run, map errors to exit codes and a
/// single-line diagnostic on stderr.
int run(int argc, const char* const* argv);

}  // namespace haarbeam::cli
