#pragma once

#include "tricoll/grid.hpp"
#include "tricoll/model.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace tricoll {

// Symmetric tridiagonal matrix: main diagonal plus the (equal) super/sub diagonal.
struct Tridiagonal {
    Eigen::VectorXd diag;
    Eigen::VectorXd off;  // size diag.size() - 1

    Eigen::Index size() const { return diag.size(); }
    Eigen::MatrixXd dense() const;
};

// Flux-form (finite-volume) discretization of
//   -mass_factor * (1/r^2) d/dr (r^2 d/dr)
// on the nodes r_k = k h, k = 1..n-1, with zero flux through r = h/2 and
// psi(L) = 0. The operator D^{-1} K (D = diag(r_k^2), K symmetric) is returned
// in its measure-symmetrized form D^{-1/2} K D^{-1/2}.
Tridiagonal radial_kinetic_1d(int n, double h, double mass_factor);

// Same scheme, unsymmetrized: the operator D^{-1} K acting on psi values.
Eigen::SparseMatrix<double> radial_kinetic_1d_direct(int n, double h, double mass_factor);

// Hamiltonian on the (R, rho) grid in the measure-symmetrized representation
//   S = mu K_R (x) I + I (x) K_rho + diag(V).
// An eigenvector phi of S maps to the physical wavefunction psi = phi / scale
// with scale(i, j) = R_i rho_j h, which is then normalized under the measure.
struct HamiltonianMatrix {
    RadialGrid grid;
    Eigen::SparseMatrix<double> matrix;
    Eigen::VectorXd potential;  // grid-sampled potential, flat layout
    Eigen::VectorXd scale;      // sqrt of the measure weights

    Eigen::Index dimension() const { return matrix.rows(); }
};

HamiltonianMatrix assemble_hamiltonian(const GridSpec& spec, const PhysicalParams& params);

// Kinetic part only (potential zeroed); positive semidefinite.
HamiltonianMatrix assemble_kinetic(const GridSpec& spec, const PhysicalParams& params);

// Direct (non-symmetric) discretization acting on psi values. Similar to the
// symmetrized matrix through the diagonal scale; used to cross-check it.
Eigen::SparseMatrix<double> assemble_direct_operator(const GridSpec& spec,
                                                     const PhysicalParams& params);

// Largest |S_ij - S_ji| over all stored entries.
double symmetry_defect(const Eigen::SparseMatrix<double>& matrix);

}  // namespace tricoll
