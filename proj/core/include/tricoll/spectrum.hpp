#pragma once

#include "tricoll/grid.hpp"
#include "tricoll/hamiltonian.hpp"

#include <Eigen/Core>

#include <complex>
#include <optional>
#include <vector>

namespace tricoll {

// Lowest eigenpairs of an assembled Hamiltonian.
//
// `states` holds one physical wavefunction psi per column, normalized under the
// radial measure and with its largest-modulus entry made positive. Residuals
// are ||S phi - E phi|| for the unit eigenvector phi of the symmetrized matrix.
struct EigenSolution {
    RadialGrid grid;
    Eigen::VectorXd energies;
    Eigen::MatrixXd states;
    Eigen::VectorXd residuals;

    int count() const { return static_cast<int>(energies.size()); }
    Eigen::VectorXd state(int k) const { return states.col(k); }
};

struct SpectrumOptions {
    // Dimensions up to this use a dense LAPACK solve, above it Lanczos.
    Eigen::Index dense_limit = 8000;
    double residual_tolerance = 1e-8;
};

// Throws InvalidSpec for count outside [1, dimension] and SolverError if any
// retained pair misses the residual tolerance.
EigenSolution solve_spectrum(const HamiltonianMatrix& hamiltonian, int count,
                             const SpectrumOptions& options = {});

// Mean of psi over the block x block nodes nearest the origin; stands in for
// psi(0, 0), which is not on the grid.
std::complex<double> psi00_proxy(const Eigen::VectorXcd& state, const RadialGrid& grid,
                                 int block = 2);
double psi00_proxy(const Eigen::VectorXd& state, const RadialGrid& grid, int block = 2);

// Two-body collision weight sum_j rho_j^2 |psi(R_1, rho_j)|^2 h, using the
// innermost R column for psi(0, rho).
double i2_collision(const Eigen::VectorXcd& state, const RadialGrid& grid);
double i2_collision(const Eigen::VectorXd& state, const RadialGrid& grid);

struct StateReport {
    int index = 0;
    double energy = 0.0;
    double delta = 0.0;   // energy - ground energy
    double psi00 = 0.0;   // proxy amplitude (states are real)
    double peak = 0.0;    // max |psi| over the grid
    double i2 = 0.0;
    bool is_triple_collision = false;
};

struct Classification {
    std::vector<StateReport> reports;
    std::optional<int> designated;  // first flagged state, if any
    double tau = 0.1;
    int block = 2;

    std::vector<int> flagged() const;
};

// A state is flagged when |psi00| / max|psi| > tau. Throws InvalidSpec unless
// 0 < tau < 1.
Classification classify(const EigenSolution& solution, double tau = 0.1, int block = 2);

// Lowest-index unflagged states above the ground state, used as references for
// the triple-collision target. Returns fewer than `how_many` if not available.
std::vector<int> reference_states(const Classification& classification, int how_many = 2);

// Largest |<psi_k, psi_l> - delta_kl| over all retained pairs.
double orthonormality_defect(const EigenSolution& solution);

}  // namespace tricoll
