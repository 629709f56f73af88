#include "tricoll/control_ops.hpp"

#include "tricoll/errors.hpp"

#include <cmath>
#include <string>

namespace tricoll {

std::string_view to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::dipole: return "dipole";
        case OperatorKind::diamagnetic: return "diamagnetic";
        case OperatorKind::magnetic_combined: return "magnetic";
    }
    return "unknown";
}

OperatorKind parse_operator_kind(std::string_view name) {
    if (name == "dipole") return OperatorKind::dipole;
    if (name == "diamagnetic") return OperatorKind::diamagnetic;
    if (name == "magnetic" || name == "magnetic_combined") return OperatorKind::magnetic_combined;
    throw InvalidSpec("unknown operator kind '" + std::string(name) + "'");
}

double dipole_value(double R, double rho) {
    const double sum = R + rho;
    const double diff = std::abs(R - rho);
    return (sum * sum * sum - diff * diff * diff) / (16.0 * R * rho);
}

ControlOperator dipole_operator(const RadialGrid& grid) {
    ControlOperator op{OperatorKind::dipole, grid, Eigen::VectorXd(grid.size())};
    for (std::size_t p = 0; p < grid.size(); ++p)
        op.diag[static_cast<Eigen::Index>(p)] = dipole_value(grid.R_at(p), grid.rho_at(p));
    return op;
}

ControlOperator diamagnetic_operator(const RadialGrid& grid, const PhysicalParams& params,
                                     double c_rho, double c_R) {
    if (!(c_rho >= 0.0) || !(c_R >= 0.0))
        throw InvalidSpec("diamagnetic_operator: coefficients must be non-negative");
    ControlOperator op{OperatorKind::diamagnetic, grid, Eigen::VectorXd(grid.size()), c_rho, c_R};
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const double R = grid.R_at(p);
        const double rho = grid.rho_at(p);
        op.diag[static_cast<Eigen::Index>(p)] =
            c_rho * rho * rho + c_R * params.Z * params.mu * R * R;
    }
    return op;
}

ControlOperator magnetic_control_operator(const RadialGrid& grid) {
    ControlOperator op = dipole_operator(grid);
    op.kind = OperatorKind::magnetic_combined;
    for (std::size_t p = 0; p < grid.size(); ++p) {
        const double rho = grid.rho_at(p);
        op.diag[static_cast<Eigen::Index>(p)] += rho * rho;
    }
    return op;
}

ControlOperator make_operator(OperatorKind kind, const RadialGrid& grid,
                              const PhysicalParams& params) {
    switch (kind) {
        case OperatorKind::dipole: return dipole_operator(grid);
        case OperatorKind::diamagnetic: return diamagnetic_operator(grid, params, 1.0, 0.0);
        case OperatorKind::magnetic_combined: return magnetic_control_operator(grid);
    }
    throw InvalidSpec("unknown operator kind");
}

ProjectedOperator project(const ControlOperator& op, const EigenSolution& solution,
                          int basis_size) {
    if (!(op.grid == solution.grid))
        throw DimensionMismatch("project: operator and eigenbasis live on different grids");
    const int K = basis_size <= 0 ? solution.count() : basis_size;
    if (K > solution.count())
        throw DimensionMismatch("project: basis size exceeds the retained states");

    const auto states = solution.states.leftCols(K);
    const Eigen::VectorXd weighted = op.diag.cwiseProduct(solution.grid.weights().full);
    Eigen::MatrixXd B = states.transpose() * (weighted.asDiagonal() * states);
    // gemm round-off is not symmetric; average the two triangles
    B = 0.5 * (B + B.transpose()).eval();
    return ProjectedOperator{op.kind, std::move(B)};
}

std::vector<double> transitivity_scan(const ProjectedOperator& op, int source, int target,
                                      int n_max) {
    const Eigen::Index K = op.size();
    if (source < 0 || source >= K || target < 0 || target >= K)
        throw InvalidSpec("transitivity_scan: state index outside the basis");
    if (n_max < 1) throw InvalidSpec("transitivity_scan: n_max must be >= 1");

    Eigen::VectorXd v = Eigen::VectorXd::Zero(K);
    v[source] = 1.0;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        v = op.matrix * v;
        const double norm = v.norm();
        if (norm == 0.0) {
            // B annihilated the vector; every further power is zero too
            out.resize(static_cast<std::size_t>(n_max), 0.0);
            break;
        }
        v /= norm;
        out.push_back(std::abs(v[target]));
    }
    return out;
}

}  // namespace tricoll
