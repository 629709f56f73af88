#pragma once

#include "tricoll/control_ops.hpp"
#include "tricoll/spectrum.hpp"

#include <Eigen/Core>

#include <vector>

namespace tricoll {

// Lyapunov feedback run in a truncated eigenbasis of the field-free Hamiltonian.
struct ControlConfig {
    double dt = 0.05;
    int n_steps = 100;
    int substeps = 1;          // feedback updates per reported iteration
    double alpha = 1.0;        // feedback gain, > 0
    double kick_field = 0.1;   // field of the single start-up step out of the dark state
    int target = -1;           // eigenstate index; must be resolved before running
    int basis_size = 600;      // K, truncation of the eigenbasis
    OperatorKind kind = OperatorKind::magnetic_combined;

    // Throws InvalidSpec when dt, alpha, substeps or n_steps are out of range
    // or the target does not fit in a basis of `available` states.
    void validate(int available) const;
};

struct TraceRecord {
    int step = 0;
    double time = 0.0;
    double overlap = 0.0;  // |<target, psi(t)>|
    double M = 0.0;        // Lyapunov value, overlap^2
    double epsilon = 0.0;  // field applied during the step that ended here
    double norm = 1.0;
};

struct ControlTrace {
    std::vector<TraceRecord> records;
    Eigen::VectorXcd final_amplitudes;
    Eigen::VectorXcd final_state;  // on the grid; empty for bare-matrix runs
    double alpha = 0.0;
    bool kicked = false;
    int target = 0;
    int basis_size = 0;

    double final_overlap() const { return records.back().overlap; }
};

// M = |<e_target, psi>|^2.
double lyapunov_value(const Eigen::VectorXcd& psi, int target);

// epsilon = -alpha Im{ <psi, e_t> <e_t, B psi> }.
double epsilon_feedback(const Eigen::VectorXcd& psi, int target, const Eigen::MatrixXd& B,
                        double alpha);
double epsilon_feedback(const Eigen::VectorXcd& psi, int target, const Eigen::MatrixXcd& B,
                        double alpha);

// exp(-i dt (diag(E) - epsilon B)) psi through an eigendecomposition of the
// Hermitian generator; exact up to the eigensolver's precision.
Eigen::VectorXcd step(const Eigen::VectorXcd& psi, const Eigen::VectorXd& energies,
                      const Eigen::MatrixXd& B, double epsilon, double dt);
Eigen::VectorXcd step(const Eigen::VectorXcd& psi, const Eigen::VectorXd& energies,
                      const Eigen::MatrixXcd& B, double epsilon, double dt);

// Control loop on bare matrices, starting from e_0. If the feedback is below
// 1e-14 at the very first update, that step is taken with `kick_field`
// instead: from a real eigenstate the feedback law is identically zero.
ControlTrace run_control_loop(const Eigen::VectorXd& energies, const Eigen::MatrixXd& B,
                              const ControlConfig& config);
ControlTrace run_control_loop(const Eigen::VectorXd& energies, const Eigen::MatrixXcd& B,
                              const ControlConfig& config);

// Full run: projects `op` onto the first K states, propagates, and rebuilds
// the final wavefunction on the grid.
ControlTrace run_control(const ControlConfig& config, const EigenSolution& solution,
                         const ControlOperator& op);

}  // namespace tricoll
