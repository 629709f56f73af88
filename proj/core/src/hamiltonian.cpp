#include "tricoll/hamiltonian.hpp"

#include "tricoll/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tricoll {

namespace {

using Triplet = Eigen::Triplet<double>;

// Flux coefficients mass_factor * r_{k+1/2}^2 / h^2 through the right face of
// each node; the face at r = h/2 carries no flux.
Eigen::VectorXd face_fluxes(int m, double h, double mass_factor) {
    Eigen::VectorXd flux(m);
    for (int k = 0; k < m; ++k) {
        const double face = (k + 1.5) * h;
        flux[k] = mass_factor * face * face / (h * h);
    }
    return flux;
}

// Symmetric flux matrix K: (K psi)_k = -[F_k (psi_{k+1} - psi_k) - F_{k-1} (psi_k - psi_{k-1})].
Tridiagonal flux_matrix(int m, double h, double mass_factor) {
    const Eigen::VectorXd flux = face_fluxes(m, h, mass_factor);
    Tridiagonal K;
    K.diag.resize(m);
    K.off.resize(m - 1);
    for (int k = 0; k < m; ++k)
        K.diag[k] = flux[k] + (k > 0 ? flux[k - 1] : 0.0);
    for (int k = 0; k + 1 < m; ++k)
        K.off[k] = -flux[k];
    return K;
}

void check_1d(int n, double h, double mass_factor) {
    if (n < 8) throw InvalidSpec("radial_kinetic_1d: n must be >= 8");
    if (!(h > 0.0)) throw InvalidSpec("radial_kinetic_1d: spacing must be positive");
    if (!(mass_factor > 0.0)) throw InvalidSpec("radial_kinetic_1d: mass factor must be positive");
}

HamiltonianMatrix assemble(const GridSpec& spec, const PhysicalParams& params,
                           bool with_potential) {
    params.validate();
    RadialGrid grid(spec);
    const int m = grid.axis_size();
    const double h = grid.spacing();
    const Tridiagonal kR = radial_kinetic_1d(spec.n, h, params.mu);
    const Tridiagonal krho = radial_kinetic_1d(spec.n, h, 1.0);

    const auto dim = static_cast<Eigen::Index>(grid.size());
    Eigen::VectorXd V = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd scale(dim);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const auto p = static_cast<Eigen::Index>(grid.flat(i, j));
            if (with_potential)
                V[p] = potential(grid.node(i), grid.node(j), params);
            scale[p] = grid.node(i) * grid.node(j) * h;
        }
    }

    std::vector<Triplet> entries;
    entries.reserve(static_cast<std::size_t>(dim) * 5);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const auto p = static_cast<Eigen::Index>(grid.flat(i, j));
            entries.emplace_back(p, p, kR.diag[i] + krho.diag[j] + V[p]);
            // each coupling is written to both triangles from one value
            if (i + 1 < m) {
                const auto r = static_cast<Eigen::Index>(grid.flat(i + 1, j));
                entries.emplace_back(p, r, kR.off[i]);
                entries.emplace_back(r, p, kR.off[i]);
            }
            if (j + 1 < m) {
                const auto r = static_cast<Eigen::Index>(grid.flat(i, j + 1));
                entries.emplace_back(p, r, krho.off[j]);
                entries.emplace_back(r, p, krho.off[j]);
            }
        }
    }
    Eigen::SparseMatrix<double> S(dim, dim);
    S.setFromTriplets(entries.begin(), entries.end());
    S.makeCompressed();

    return HamiltonianMatrix{std::move(grid), std::move(S), std::move(V), std::move(scale)};
}

}  // namespace

Eigen::MatrixXd Tridiagonal::dense() const {
    const Eigen::Index m = size();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, m);
    out.diagonal() = diag;
    for (Eigen::Index k = 0; k + 1 < m; ++k) {
        out(k, k + 1) = off[k];
        out(k + 1, k) = off[k];
    }
    return out;
}

Tridiagonal radial_kinetic_1d(int n, double h, double mass_factor) {
    check_1d(n, h, mass_factor);
    const int m = n - 1;
    Tridiagonal K = flux_matrix(m, h, mass_factor);
    // D^{-1/2} K D^{-1/2} with D = diag(r_k^2)
    for (int k = 0; k < m; ++k) {
        const double r = (k + 1) * h;
        K.diag[k] /= r * r;
    }
    for (int k = 0; k + 1 < m; ++k) {
        const double r = (k + 1) * h;
        K.off[k] /= r * (r + h);
    }
    return K;
}

Eigen::SparseMatrix<double> radial_kinetic_1d_direct(int n, double h, double mass_factor) {
    check_1d(n, h, mass_factor);
    const int m = n - 1;
    const Tridiagonal K = flux_matrix(m, h, mass_factor);
    std::vector<Triplet> entries;
    for (int k = 0; k < m; ++k) {
        const double r2 = ((k + 1) * h) * ((k + 1) * h);
        entries.emplace_back(k, k, K.diag[k] / r2);
        if (k > 0) entries.emplace_back(k, k - 1, K.off[k - 1] / r2);
        if (k + 1 < m) entries.emplace_back(k, k + 1, K.off[k] / r2);
    }
    Eigen::SparseMatrix<double> A(m, m);
    A.setFromTriplets(entries.begin(), entries.end());
    return A;
}

HamiltonianMatrix assemble_hamiltonian(const GridSpec& spec, const PhysicalParams& params) {
    return assemble(spec, params, true);
}

HamiltonianMatrix assemble_kinetic(const GridSpec& spec, const PhysicalParams& params) {
    return assemble(spec, params, false);
}

Eigen::SparseMatrix<double> assemble_direct_operator(const GridSpec& spec,
                                                     const PhysicalParams& params) {
    params.validate();
    const RadialGrid grid(spec);
    const int m = grid.axis_size();
    const double h = grid.spacing();
    const Eigen::SparseMatrix<double> aR = radial_kinetic_1d_direct(spec.n, h, params.mu);
    const Eigen::SparseMatrix<double> arho = radial_kinetic_1d_direct(spec.n, h, 1.0);

    std::vector<Triplet> entries;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const auto p = static_cast<Eigen::Index>(grid.flat(i, j));
            entries.emplace_back(p, p, potential(grid.node(i), grid.node(j), params));
        }
    }
    for (int k = 0; k < aR.outerSize(); ++k) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(aR, k); it; ++it)
            for (int j = 0; j < m; ++j)
                entries.emplace_back(static_cast<Eigen::Index>(grid.flat(it.row(), j)),
                                     static_cast<Eigen::Index>(grid.flat(it.col(), j)), it.value());
        for (Eigen::SparseMatrix<double>::InnerIterator it(arho, k); it; ++it)
            for (int i = 0; i < m; ++i)
                entries.emplace_back(static_cast<Eigen::Index>(grid.flat(i, it.row())),
                                     static_cast<Eigen::Index>(grid.flat(i, it.col())), it.value());
    }
    const auto dim = static_cast<Eigen::Index>(grid.size());
    Eigen::SparseMatrix<double> A(dim, dim);
    A.setFromTriplets(entries.begin(), entries.end());
    A.makeCompressed();
    return A;
}

double symmetry_defect(const Eigen::SparseMatrix<double>& matrix) {
    const Eigen::SparseMatrix<double> diff = matrix - Eigen::SparseMatrix<double>(matrix.transpose());
    double worst = 0.0;
    for (int k = 0; k < diff.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(diff, k); it; ++it)
            worst = std::max(worst, std::abs(it.value()));
    return worst;
}

}  // namespace tricoll
