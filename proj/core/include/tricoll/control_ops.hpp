#pragma once

#include "tricoll/grid.hpp"
#include "tricoll/model.hpp"
#include "tricoll/spectrum.hpp"

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace tricoll {

enum class OperatorKind { dipole, diamagnetic, magnetic_combined };

std::string_view to_string(OperatorKind kind);
// Accepts "dipole", "diamagnetic", "magnetic" / "magnetic_combined".
OperatorKind parse_operator_kind(std::string_view name);

// Control operator acting on maximally symmetric states. All of them are
// multiplicative on the (R, rho) grid, so only the diagonal is stored.
// Field prefactors are absorbed into the control intensity.
struct ControlOperator {
    OperatorKind kind = OperatorKind::dipole;
    RadialGrid grid;
    Eigen::VectorXd diag;
    double c_rho = 0.0;  // diamagnetic coefficients, zero otherwise
    double c_R = 0.0;
};

// Angle-averaged dipole coupling ((R + rho)^3 - |R - rho|^3) / (16 R rho).
double dipole_value(double R, double rho);

ControlOperator dipole_operator(const RadialGrid& grid);

// c_rho rho^2 + c_R Z mu R^2. Throws InvalidSpec for negative coefficients.
ControlOperator diamagnetic_operator(const RadialGrid& grid, const PhysicalParams& params,
                                     double c_rho, double c_R);

// Dipole plus rho^2, the working magnetic control operator.
ControlOperator magnetic_control_operator(const RadialGrid& grid);

// Builds the operator of the given kind with default coefficients
// (c_rho = 1, c_R = 0 for the diamagnetic form).
ControlOperator make_operator(OperatorKind kind, const RadialGrid& grid,
                              const PhysicalParams& params);

// Matrix elements B_kl = <psi_k | diag | psi_l> in a truncated eigenbasis.
struct ProjectedOperator {
    OperatorKind kind = OperatorKind::dipole;
    Eigen::MatrixXd matrix;

    Eigen::Index size() const { return matrix.rows(); }
};

// Projects onto the first `basis_size` states of the solution (all of them if
// basis_size <= 0). Throws DimensionMismatch if the grids differ.
ProjectedOperator project(const ControlOperator& op, const EigenSolution& solution,
                          int basis_size = 0);

// Renormalized power iteration v_n = B v_{n-1} / |B v_{n-1}| from e_source;
// returns |<e_target, v_n>| for n = 1..n_max. Zero entries coincide with
// zero entries of the unnormalized (B^n)_{target, source}.
std::vector<double> transitivity_scan(const ProjectedOperator& op, int source, int target,
                                      int n_max);

}  // namespace tricoll
