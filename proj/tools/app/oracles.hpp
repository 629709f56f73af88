#pragma once

#include <string>
#include <vector>

namespace tricoll::app {

struct OracleResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;      // worst observed error in the oracle's own metric
    double tolerance = 0.0;
    std::string detail;
};

// Radial -d^2 - 1/r on n=2000, L=60: the lowest three levels against -1/(4 k^2),
// relative tolerance 3%.
OracleResult hydrogen_oracle();

// Two-level system E = {0, 1}, B = sigma_x, constant field: upper-level
// occupation against the closed-form Rabi formula, absolute tolerance 1e-10.
OracleResult rabi_oracle();

std::vector<OracleResult> run_oracles();

}  // namespace tricoll::app
