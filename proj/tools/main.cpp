#include "app/commands.hpp"
#include "app/config.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace tricoll::app;

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out = "out";
    std::string cache = ".tricoll-cache";
    std::vector<std::string> settings;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "Configuration file (key = value lines)");
    cmd->add_option("--out", flags.out, "Output directory")->capture_default_str();
    cmd->add_option("--cache", flags.cache, "Eigenbasis cache directory")->capture_default_str();
    cmd->add_option("--set", flags.settings, "Override one key, e.g. --set n_steps=0");
}

// Loads the file (if any) and applies --set and command-specific overrides.
std::optional<RunConfig> resolve(const CommonFlags& flags, const std::vector<std::pair<std::string, std::string>>& extra) {
    try {
        RunConfig config = flags.config_path.empty() ? RunConfig{} : load_config(flags.config_path);
        for (const auto& s : flags.settings) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + s + "'");
            apply_setting(config, s.substr(0, eq), s.substr(eq + 1));
        }
        for (const auto& [k, v] : extra) apply_setting(config, k, v);
        config.validate();
        return config;
    } catch (const ConfigError& e) {
        write_error_record(std::cerr, "config", e.what(), exit_config);
        return std::nullopt;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tricoll: triple-collision spectra and Lyapunov control of a three-body Coulomb system"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string op;
    int n_max = 0;

    auto* spectrum = app.add_subcommand("spectrum", "Solve, classify and export the spectrum");
    add_common(spectrum, flags);

    auto* transitivity = app.add_subcommand("transitivity", "Scan powers of a control operator");
    add_common(transitivity, flags);
    transitivity->add_option("--operator", op, "dipole | magnetic | diamagnetic");
    transitivity->add_option("--n-max", n_max, "Highest operator power");

    auto* control = app.add_subcommand("control", "Lyapunov feedback run from the ground state");
    add_common(control, flags);
    control->add_option("--operator", op, "dipole | magnetic | diamagnetic");

    auto* oracle = app.add_subcommand("oracle", "Run the hydrogen and Rabi oracles");
    add_common(oracle, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        write_error_record(std::cerr, "usage", e.what(), exit_config);
        return exit_config;
    }

    const Paths paths{flags.out, flags.cache};
    const Streams io{std::cout, std::cerr};
    std::vector<std::pair<std::string, std::string>> extra;
    if (!op.empty()) extra.emplace_back("operator", op);
    if (n_max != 0) extra.emplace_back("n_max", std::to_string(n_max));

    if (*oracle) return cmd_oracle(paths, io);

    const auto config = resolve(flags, extra);
    if (!config) return exit_config;
    if (*spectrum) return cmd_spectrum(*config, paths, io);
    if (*transitivity) return cmd_transitivity(*config, paths, io);
    return cmd_control(*config, paths, io);
}
