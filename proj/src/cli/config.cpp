// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <iostream>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "haarbeam/cli.hpp"

namespace haarbeam::cli {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

struct RawOptions {
    std::optional<int> m;
    std::optional<std::string> waveform;
    std::optional<std::string> grid;
    std::optional<std::string> coeffs;
    std::optional<int> elements;
    std::optional<double> spacing;
    std::optional<double> theta0;
    std::optional<double> f0;
    std::optional<int> q_max;
    std::optional<std::string> q_list;
    std::optional<double> theta_step;
    std::optional<double> theta_a;
    std::optional<double> f0_a;
    std::optional<double> theta_b;
    std::optional<double> f0_b;
    std::optional<std::string> out;
    std::optional<std::string> pattern_out;
};

// Keys each command accepts, config-file spelling (underscores).
const std::map<Command, std::set<std::string>> kCommandKeys = {
    {Command::synthesize, {"m", "waveform", "grid", "out"}},
    {Command::spectrum, {"m", "waveform", "grid", "coeffs", "f0", "q_max", "out"}},
    {Command::pattern,
     {"m", "waveform", "grid", "coeffs", "elements", "spacing", "theta0", "f0", "q_max", "q_list",
      "theta_step", "out"}},
    {Command::metrics, {"m", "waveform", "grid", "coeffs", "f0", "q_max", "out"}},
    {Command::schedule, {"m", "waveform", "grid", "coeffs", "elements", "theta0", "f0", "out"}},
    {Command::multibeam,
     {"elements", "spacing", "theta_a", "f0_a", "theta_b", "f0_b", "theta_step", "out",
      "pattern_out"}},
};

Command command_from_name(const std::string& name) {
    if (name == "synthesize") return Command::synthesize;
    if (name == "spectrum") return Command::spectrum;
    if (name == "pattern") return Command::pattern;
    if (name == "metrics") return Command::metrics;
    if (name == "schedule") return Command::schedule;
    if (name == "multibeam") return Command::multibeam;
    throw ConfigError("unknown command: " + name);
}

template <typename T>
void merge_number(const nlohmann::json& doc, const std::string& key, std::optional<T>& slot);

template <>
void merge_number<int>(const nlohmann::json& doc, const std::string& key,
                       std::optional<int>& slot) {
    if (!doc[key].is_number_integer()) {
        throw ConfigError("config key '" + key + "' must be an integer");
    }
    if (!slot) slot = doc[key].get<int>();
}

template <>
void merge_number<double>(const nlohmann::json& doc, const std::string& key,
                          std::optional<double>& slot) {
    if (!doc[key].is_number()) {
        throw ConfigError("config key '" + key + "' must be a number");
    }
    if (!slot) slot = doc[key].get<double>();
}

void merge_string(const nlohmann::json& doc, const std::string& key,
                  std::optional<std::string>& slot) {
    if (!doc[key].is_string()) {
        throw ConfigError("config key '" + key + "' must be a string");
    }
    if (!slot) slot = doc[key].get<std::string>();
}

/// Flag values take precedence; the file only fills slots flags left empty.
void merge_config_file(Command command, const std::string& path, RawOptions& raw) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed config file " + path + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config file must hold a flat JSON object");
    }
    const std::set<std::string>& allowed = kCommandKeys.at(command);
    for (const auto& item : doc.items()) {
        const std::string& key = item.key();
        if (!allowed.count(key)) {
            throw ConfigError("unknown config key: " + key);
        }
        if (key == "m") merge_number<int>(doc, key, raw.m);
        else if (key == "waveform") merge_string(doc, key, raw.waveform);
        else if (key == "grid") merge_string(doc, key, raw.grid);
        else if (key == "coeffs") merge_string(doc, key, raw.coeffs);
        else if (key == "elements") merge_number<int>(doc, key, raw.elements);
        else if (key == "spacing") merge_number<double>(doc, key, raw.spacing);
        else if (key == "theta0") merge_number<double>(doc, key, raw.theta0);
        else if (key == "f0") merge_number<double>(doc, key, raw.f0);
        else if (key == "q_max") merge_number<int>(doc, key, raw.q_max);
        else if (key == "q_list") merge_string(doc, key, raw.q_list);
        else if (key == "theta_step") merge_number<double>(doc, key, raw.theta_step);
        else if (key == "theta_a") merge_number<double>(doc, key, raw.theta_a);
        else if (key == "f0_a") merge_number<double>(doc, key, raw.f0_a);
        else if (key == "theta_b") merge_number<double>(doc, key, raw.theta_b);
        else if (key == "f0_b") merge_number<double>(doc, key, raw.f0_b);
        else if (key == "out") merge_string(doc, key, raw.out);
        else if (key == "pattern_out") merge_string(doc, key, raw.pattern_out);
    }
}

std::vector<int> parse_q_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            std::size_t used = 0;
            const int q = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(q);
        } catch (const std::exception&) {
            throw ConfigError("q_list entry '" + token + "' is not an integer");
        }
    }
    if (out.empty()) {
        throw ConfigError("q_list must contain at least one harmonic order");
    }
    return out;
}

int max_threads_from_env() {
    const char* env = std::getenv("TMA_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    try {
        std::size_t used = 0;
        const int threads = std::stoi(env, &used);
        if (used != std::string(env).size() || threads < 1 || threads > 1024) {
            throw std::invalid_argument(env);
        }
        return threads;
    } catch (const std::exception&) {
        throw ConfigError("TMA_THREADS must be a positive integer");
    }
}

void validate_angle(double value, const std::string& key) {
    if (!(value >= 0.0 && value <= 180.0)) {
        throw ConfigError(key + " must lie in [0, 180] degrees");
    }
}

RunConfig finalize(Command command, const RawOptions& raw) {
    RunConfig config;
    config.command = command;
    config.max_threads = max_threads_from_env();

    const bool needs_waveform = command != Command::multibeam;
    if (needs_waveform) {
        config.coeffs_path = raw.coeffs;
        if (raw.m) {
            if (!is_power_of_two(*raw.m) || *raw.m < 4) {
                throw ConfigError("m must be a power of two >= 4");
            }
            config.m = *raw.m;
        } else if (!config.coeffs_path) {
            throw ConfigError("m is required (or pass a coefficients file via coeffs)");
        }
        config.waveform = raw.waveform.value_or("sine");
        if (config.waveform != "sine") {
            throw ConfigError("waveform must be \"sine\"");
        }
        config.grid = raw.grid.value_or("midpoint");
        if (config.grid != "midpoint" && config.grid != "left") {
            throw ConfigError("grid must be \"midpoint\" or \"left\"");
        }
    }

    config.elements = raw.elements.value_or(16);
    if (config.elements < 1) {
        throw ConfigError("elements must be >= 1");
    }
    config.spacing = raw.spacing.value_or(0.5);
    if (!(config.spacing > 0.0)) {
        throw ConfigError("spacing must be positive");
    }
    config.theta0 = raw.theta0.value_or(90.0);
    validate_angle(config.theta0, "theta0");
    config.f0 = raw.f0.value_or(1.0e6);
    if (!(config.f0 > 0.0)) {
        throw ConfigError("f0 must be positive");
    }
    if (raw.q_max) {
        if (*raw.q_max < 1) {
            throw ConfigError("q_max must be >= 1");
        }
        config.q_max = *raw.q_max;
    }
    if (raw.q_list) {
        config.q_list = parse_q_list(*raw.q_list);
    }
    config.theta_step = raw.theta_step.value_or(0.1);
    if (!(config.theta_step > 0.0 && config.theta_step <= 180.0)) {
        throw ConfigError("theta_step must lie in (0, 180] degrees");
    }

    if (command == Command::multibeam) {
        if (!raw.theta_a || !raw.theta_b) {
            throw ConfigError("multibeam requires theta_a and theta_b");
        }
        config.theta_a = *raw.theta_a;
        config.theta_b = *raw.theta_b;
        validate_angle(config.theta_a, "theta_a");
        validate_angle(config.theta_b, "theta_b");
        config.f0_a = raw.f0_a.value_or(1.0e6);
        if (!(config.f0_a > 0.0)) {
            throw ConfigError("f0_a must be positive");
        }
        config.f0_b = raw.f0_b.value_or(4.0 * config.f0_a);
        if (!(config.f0_b > 0.0)) {
            throw ConfigError("f0_b must be positive");
        }
        if (config.f0_a == config.f0_b) {
            throw ConfigError("f0_a and f0_b must differ (beams are not separable)");
        }
        config.pattern_out = raw.pattern_out;
    }

    if (!raw.out) {
        throw ConfigError("out is required");
    }
    config.out = *raw.out;
    return config;
}

void add_command_options(CLI::App* cmd, Command command, RawOptions& raw,
                         std::optional<std::string>& config_path) {
    const std::set<std::string>& keys = kCommandKeys.at(command);
    cmd->add_option_function<std::string>(
           "--config", [&config_path](const std::string& v) { config_path = v; },
           "flat JSON config file; flags override file values")
        ->option_text("FILE");

    const auto add_int = [&](const char* flag, std::optional<int>& slot, const char* help) {
        cmd->add_option_function<int>(flag, [&slot](const int& v) { slot = v; }, help);
    };
    const auto add_double = [&](const char* flag, std::optional<double>& slot, const char* help) {
        cmd->add_option_function<double>(flag, [&slot](const double& v) { slot = v; }, help);
    };
    const auto add_string = [&](const char* flag, std::optional<std::string>& slot,
                                const char* help) {
        cmd->add_option_function<std::string>(flag, [&slot](const std::string& v) { slot = v; },
                                              help);
    };

    if (keys.count("m")) add_int("--m", raw.m, "stair-step resolution M (power of two >= 4)");
    if (keys.count("waveform")) add_string("--waveform", raw.waveform, "modulating waveform (sine)");
    if (keys.count("grid")) add_string("--grid", raw.grid, "sampling grid: midpoint | left");
    if (keys.count("coeffs")) add_string("--coeffs", raw.coeffs, "read coefficients from JSON file");
    if (keys.count("elements")) add_int("--elements", raw.elements, "array element count N");
    if (keys.count("spacing")) add_double("--spacing", raw.spacing, "element pitch in wavelengths");
    if (keys.count("theta0")) add_double("--theta0", raw.theta0, "steering angle in degrees");
    if (keys.count("f0")) add_double("--f0", raw.f0, "fundamental frequency in Hz");
    if (keys.count("q_max")) add_int("--q-max", raw.q_max, "harmonic window half-width");
    if (keys.count("q_list")) add_string("--q-list", raw.q_list, "comma-separated harmonic orders");
    if (keys.count("theta_step")) add_double("--theta-step", raw.theta_step, "grid step in degrees");
    if (keys.count("theta_a")) add_double("--theta-a", raw.theta_a, "beam A angle in degrees");
    if (keys.count("f0_a")) add_double("--f0-a", raw.f0_a, "beam A fundamental in Hz");
    if (keys.count("theta_b")) add_double("--theta-b", raw.theta_b, "beam B angle in degrees");
    if (keys.count("f0_b")) add_double("--f0-b", raw.f0_b, "beam B fundamental in Hz");
    if (keys.count("out")) add_string("--out", raw.out, "output file path");
    if (keys.count("pattern_out")) {
        add_string("--pattern-out", raw.pattern_out, "also write the composite pattern CSV");
    }
}

}  // namespace

RunConfig load_config(const std::vector<std::string>& args) {
    CLI::App app{"stair-step sine TMA synthesis and simulation"};
    app.require_subcommand(1);

    struct PerCommand {
        Command command;
        RawOptions raw;
        std::optional<std::string> config_path;
        CLI::App* sub = nullptr;
    };
    std::vector<PerCommand> commands;
    commands.reserve(6);
    for (const char* name :
         {"synthesize", "spectrum", "pattern", "metrics", "schedule", "multibeam"}) {
        PerCommand entry;
        entry.command = command_from_name(name);
        commands.push_back(std::move(entry));
    }
    for (PerCommand& entry : commands) {
        const char* name = nullptr;
        switch (entry.command) {
            case Command::synthesize: name = "synthesize"; break;
            case Command::spectrum: name = "spectrum"; break;
            case Command::pattern: name = "pattern"; break;
            case Command::metrics: name = "metrics"; break;
            case Command::schedule: name = "schedule"; break;
            case Command::multibeam: name = "multibeam"; break;
        }
        entry.sub = app.add_subcommand(name, "");
        add_command_options(entry.sub, entry.command, entry.raw, entry.config_path);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        throw HelpShown{};
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        throw HelpShown{};
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    for (PerCommand& entry : commands) {
        if (!entry.sub->parsed()) continue;
        if (entry.config_path) {
            merge_config_file(entry.command, *entry.config_path, entry.raw);
        }
        return finalize(entry.command, entry.raw);
    }
    throw ConfigError("no command given (expected one of: synthesize, spectrum, pattern, "
                      "metrics, schedule, multibeam)");
}

}  // namespace haarbeam::cli
