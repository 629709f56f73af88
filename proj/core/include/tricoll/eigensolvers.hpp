#pragma once

#include "tricoll/hamiltonian.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace tricoll {

// Ascending eigenvalues with eigenvectors as orthonormal columns.
struct EigenPairs {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
    int iterations = 0;  // Krylov dimension for Lanczos, 0 for direct methods
};

// Lowest `count` eigenpairs of a dense symmetric matrix (LAPACK dsyevr).
EigenPairs lowest_eigenpairs_dense(const Eigen::MatrixXd& matrix, int count);

// Lowest `count` eigenpairs of a symmetric tridiagonal matrix (LAPACK dstevr).
EigenPairs lowest_eigenpairs_tridiagonal(const Tridiagonal& matrix, int count);

// Lowest `count` eigenpairs of a sparse symmetric matrix by Lanczos with full
// reorthogonalization. The Krylov space grows until every wanted Ritz pair
// has residual below `tolerance`; throws SolverError if the space reaches the
// full dimension first.
EigenPairs lowest_eigenpairs_lanczos(const Eigen::SparseMatrix<double>& matrix, int count,
                                     double tolerance);

// Full eigendecomposition of a small dense symmetric matrix.
EigenPairs symmetric_eigen(const Eigen::MatrixXd& matrix);

}  // namespace tricoll
