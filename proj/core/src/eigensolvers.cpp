#include "tricoll/eigensolvers.hpp"

#include "tricoll/errors.hpp"

#include <lapacke.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace tricoll {

namespace {

void check_count(Eigen::Index dim, int count) {
    if (count < 1 || count > dim)
        throw InvalidSpec("eigensolver: count must be in [1, " + std::to_string(dim) + "], got " +
                          std::to_string(count));
}

}  // namespace

EigenPairs lowest_eigenpairs_dense(const Eigen::MatrixXd& matrix, int count) {
    const auto n = static_cast<lapack_int>(matrix.rows());
    check_count(n, count);

    Eigen::MatrixXd a = matrix;
    EigenPairs out;
    Eigen::VectorXd w(n);
    out.vectors.resize(n, count);
    std::vector<lapack_int> support(2 * static_cast<std::size_t>(count));
    lapack_int found = 0;
    const double abstol = LAPACKE_dlamch('S');

    const lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, a.data(), n, 0.0,
                                           0.0, 1, count, abstol, &found, w.data(),
                                           out.vectors.data(), n, support.data());
    if (info != 0 || found != count)
        throw SolverError("dsyevr failed (info=" + std::to_string(info) +
                              ", found=" + std::to_string(found) + ")",
                          0, std::nan(""));
    out.values = w.head(count);
    return out;
}

EigenPairs lowest_eigenpairs_tridiagonal(const Tridiagonal& matrix, int count) {
    const auto n = static_cast<lapack_int>(matrix.size());
    check_count(n, count);

    Eigen::VectorXd d = matrix.diag;
    Eigen::VectorXd e(n);
    e.head(n - 1) = matrix.off;
    e[n - 1] = 0.0;

    EigenPairs out;
    Eigen::VectorXd w(n);
    out.vectors.resize(n, count);
    std::vector<lapack_int> support(2 * static_cast<std::size_t>(count));
    lapack_int found = 0;
    const double abstol = LAPACKE_dlamch('S');

    const lapack_int info =
        LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(), 0.0, 0.0, 1, count,
                       abstol, &found, w.data(), out.vectors.data(), n, support.data());
    if (info != 0 || found != count)
        throw SolverError("dstevr failed (info=" + std::to_string(info) + ")", 0, std::nan(""));
    out.values = w.head(count);
    return out;
}

EigenPairs symmetric_eigen(const Eigen::MatrixXd& matrix) {
    const auto n = static_cast<lapack_int>(matrix.rows());
    if (n == 0) return {};
    Eigen::MatrixXd a = matrix;
    EigenPairs out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
    lapack_int found = 0;
    const lapack_int info =
        LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'A', 'L', n, a.data(), n, 0.0, 0.0, 0, 0,
                       LAPACKE_dlamch('S'), &found, out.values.data(), out.vectors.data(), n,
                       support.data());
    if (info != 0 || found != n)
        throw SolverError("dsyevr (full) failed (info=" + std::to_string(info) + ")", 0,
                          std::nan(""));
    return out;
}

EigenPairs lowest_eigenpairs_lanczos(const Eigen::SparseMatrix<double>& matrix, int count,
                                     double tolerance) {
    const Eigen::Index n = matrix.rows();
    check_count(n, count);

    // Fixed seed: the start vector, and therefore the result, is reproducible.
    std::mt19937_64 rng(0x7269636f6c6cULL);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    Eigen::VectorXd start(n);
    for (Eigen::Index k = 0; k < n; ++k) start[k] = uniform(rng);

    Eigen::Index capacity = std::min<Eigen::Index>(n, 2 * count + 40);
    Eigen::MatrixXd basis(n, capacity);
    std::vector<double> alpha;
    std::vector<double> beta;
    basis.col(0) = start.normalized();

    Eigen::Index built = 0;
    Eigen::VectorXd pending;
    double worst = std::nan("");
    for (;;) {
        while (built < capacity) {
            const Eigen::Index j = built;
            Eigen::VectorXd w = matrix * basis.col(j);
            alpha.push_back(basis.col(j).dot(w));
            // two passes of classical Gram-Schmidt against the whole basis
            for (int pass = 0; pass < 2; ++pass) {
                const Eigen::VectorXd c = basis.leftCols(j + 1).transpose() * w;
                w.noalias() -= basis.leftCols(j + 1) * c;
            }
            double b = w.norm();
            ++built;
            if (built == n) break;
            if (b < 1e-14) {
                // invariant subspace found; continue from a fresh orthogonal direction
                for (Eigen::Index k = 0; k < n; ++k) w[k] = uniform(rng);
                for (int pass = 0; pass < 2; ++pass)
                    w -= basis.leftCols(built) * (basis.leftCols(built).transpose() * w);
                w.normalize();
                b = 0.0;
            } else {
                w /= b;
            }
            beta.push_back(b);
            if (built < capacity) basis.col(built) = w;
            else pending = std::move(w);
        }

        const Eigen::Index m = built;
        Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
        Eigen::VectorXd sub = Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz;
        ritz.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);

        const int wanted = static_cast<int>(std::min<Eigen::Index>(count, m));
        worst = 0.0;
        const double tail = (m < n) ? beta[static_cast<std::size_t>(m - 1)] : 0.0;
        for (int k = 0; k < wanted; ++k)
            worst = std::max(worst, std::abs(tail * ritz.eigenvectors()(m - 1, k)));

        if (wanted == count && worst < 0.1 * tolerance) {
            EigenPairs out;
            out.values = ritz.eigenvalues().head(count);
            out.vectors = basis.leftCols(m) * ritz.eigenvectors().leftCols(count);
            for (int k = 0; k < count; ++k) out.vectors.col(k).normalize();
            out.iterations = static_cast<int>(m);
            return out;
        }
        if (m == n)
            throw SolverError("Lanczos exhausted the full space without converging", static_cast<int>(m),
                              worst);

        const Eigen::Index grown = std::min<Eigen::Index>(n, 2 * capacity);
        basis.conservativeResize(n, grown);
        basis.col(built) = pending;
        capacity = grown;
    }
}

}  // namespace tricoll
