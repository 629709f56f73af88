#include "tricoll/spectrum.hpp"

#include "tricoll/eigensolvers.hpp"
#include "tricoll/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace tricoll {

namespace {

void check_block(const RadialGrid& grid, int block) {
    if (block < 1 || block > grid.axis_size())
        throw InvalidSpec("psi00_proxy: block must be in [1, n-1]");
}

template <typename Vector>
auto block_mean(const Vector& state, const RadialGrid& grid, int block) {
    if (state.size() != static_cast<Eigen::Index>(grid.size()))
        throw DimensionMismatch("psi00_proxy: state does not live on this grid");
    check_block(grid, block);
    typename Vector::Scalar sum{0.0};
    for (int i = 0; i < block; ++i)
        for (int j = 0; j < block; ++j)
            sum += state[static_cast<Eigen::Index>(grid.flat(i, j))];
    return sum / static_cast<double>(block * block);
}

template <typename Vector>
double inner_column_weight(const Vector& state, const RadialGrid& grid) {
    if (state.size() != static_cast<Eigen::Index>(grid.size()))
        throw DimensionMismatch("i2_collision: state does not live on this grid");
    const double h = grid.spacing();
    double sum = 0.0;
    for (int j = 0; j < grid.axis_size(); ++j) {
        const double rho = grid.node(j);
        sum += rho * rho * std::norm(state[static_cast<Eigen::Index>(grid.flat(0, j))]) * h;
    }
    return sum;
}

}  // namespace

EigenSolution solve_spectrum(const HamiltonianMatrix& hamiltonian, int count,
                             const SpectrumOptions& options) {
    const Eigen::Index dim = hamiltonian.dimension();
    if (count < 1 || count > dim)
        throw InvalidSpec("solve_spectrum: count must be in [1, " + std::to_string(dim) + "]");

    EigenPairs pairs = dim <= options.dense_limit
                           ? lowest_eigenpairs_dense(Eigen::MatrixXd(hamiltonian.matrix), count)
                           : lowest_eigenpairs_lanczos(hamiltonian.matrix, count,
                                                       options.residual_tolerance);

    std::vector<int> order(static_cast<std::size_t>(count));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pairs.values[a] < pairs.values[b]; });

    EigenSolution out{hamiltonian.grid, Eigen::VectorXd(count), Eigen::MatrixXd(dim, count),
                      Eigen::VectorXd(count)};
    double worst = 0.0;
    for (int k = 0; k < count; ++k) {
        const int src = order[static_cast<std::size_t>(k)];
        Eigen::VectorXd phi = pairs.vectors.col(src);
        phi.normalize();
        const double energy = pairs.values[src];
        const double residual = (hamiltonian.matrix * phi - energy * phi).norm();
        worst = std::max(worst, residual);

        Eigen::VectorXd psi = phi.cwiseQuotient(hamiltonian.scale);
        psi /= std::sqrt(inner_product(psi, psi, out.grid.weights()));
        Eigen::Index peak = 0;
        psi.cwiseAbs().maxCoeff(&peak);
        if (psi[peak] < 0.0) psi = -psi;

        out.energies[k] = energy;
        out.states.col(k) = psi;
        out.residuals[k] = residual;
    }
    if (worst >= options.residual_tolerance)
        throw SolverError("eigenpair residual " + std::to_string(worst) + " exceeds tolerance",
                          pairs.iterations, worst);
    return out;
}

std::complex<double> psi00_proxy(const Eigen::VectorXcd& state, const RadialGrid& grid,
                                 int block) {
    return block_mean(state, grid, block);
}

double psi00_proxy(const Eigen::VectorXd& state, const RadialGrid& grid, int block) {
    return block_mean(state, grid, block);
}

double i2_collision(const Eigen::VectorXcd& state, const RadialGrid& grid) {
    return inner_column_weight(state, grid);
}

double i2_collision(const Eigen::VectorXd& state, const RadialGrid& grid) {
    return inner_column_weight(state, grid);
}

std::vector<int> Classification::flagged() const {
    std::vector<int> out;
    for (const auto& r : reports)
        if (r.is_triple_collision) out.push_back(r.index);
    return out;
}

Classification classify(const EigenSolution& solution, double tau, int block) {
    if (!(tau > 0.0 && tau < 1.0))
        throw InvalidSpec("classify: tau must lie in (0, 1)");
    check_block(solution.grid, block);

    Classification out;
    out.tau = tau;
    out.block = block;
    out.reports.reserve(static_cast<std::size_t>(solution.count()));
    const double ground = solution.energies[0];
    for (int k = 0; k < solution.count(); ++k) {
        const Eigen::VectorXd psi = solution.states.col(k);
        StateReport r;
        r.index = k;
        r.energy = solution.energies[k];
        r.delta = k == 0 ? 0.0 : std::max(0.0, r.energy - ground);
        r.psi00 = psi00_proxy(psi, solution.grid, block);
        r.peak = psi.cwiseAbs().maxCoeff();
        r.i2 = i2_collision(psi, solution.grid);
        r.is_triple_collision = std::abs(r.psi00) > tau * r.peak;
        if (r.is_triple_collision && !out.designated) out.designated = k;
        out.reports.push_back(r);
    }
    return out;
}

std::vector<int> reference_states(const Classification& classification, int how_many) {
    std::vector<int> out;
    for (const auto& r : classification.reports) {
        if (static_cast<int>(out.size()) == how_many) break;
        if (r.index > 0 && !r.is_triple_collision) out.push_back(r.index);
    }
    return out;
}

double orthonormality_defect(const EigenSolution& solution) {
    const Eigen::MatrixXd weighted =
        solution.grid.weights().full.asDiagonal() * solution.states;
    Eigen::MatrixXd gram = solution.states.transpose() * weighted;
    gram -= Eigen::MatrixXd::Identity(gram.rows(), gram.cols());
    return gram.cwiseAbs().maxCoeff();
}

}  // namespace tricoll
