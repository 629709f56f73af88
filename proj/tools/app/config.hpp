#pragma once

#include <tricoll/control_ops.hpp>
#include <tricoll/grid.hpp>
#include <tricoll/model.hpp>
#include <tricoll/propagation.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace tricoll::app {

// Malformed file, unknown key, bad value type, or a value outside its range.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Everything a run needs, with all defaults resolved.
struct RunConfig {
    PhysicalParams params;
    GridSpec grid;
    int count = 600;           // retained eigenstates
    double tau = 0.1;          // triple-collision threshold
    int block = 2;             // psi(0,0) proxy block
    ControlConfig control;     // control.target < 0 means "designated state"
    double c_rho = 1.0;        // diamagnetic coefficients
    double c_R = 0.0;
    int n_max = 50;            // transitivity powers

    // Checks cross-component invariants; throws ConfigError.
    void validate() const;
};

// Parses "key = value" lines; '#' starts a comment. Unknown or repeated keys
// are errors. Keys not present keep their defaults.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path);

// Applies one "key=value" override on top of a config.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

// Every key, fixed order, doubles at 17 significant digits. Parsing the
// output yields the same RunConfig.
void write_config(std::ostream& out, const RunConfig& config);

}  // namespace tricoll::app
