#pragma once

#include <stdexcept>
#include <string>

namespace tricoll {

// Raised for grid/config values that violate a documented precondition.
class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An eigensolver or matrix factorization did not meet its accuracy contract.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, int iterations, double worst_residual)
        : std::runtime_error(what), iterations_(iterations), worst_residual_(worst_residual) {}

    int iterations() const noexcept { return iterations_; }
    double worst_residual() const noexcept { return worst_residual_; }

private:
    int iterations_;
    double worst_residual_;
};

// Two objects that must share a grid or basis do not.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace tricoll
