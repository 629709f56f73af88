#include <tricoll/eigensolvers.hpp>
#include <tricoll/errors.hpp>
#include <tricoll/spectrum.hpp>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace tricoll;

namespace {

const EigenSolution& small_solution() {
    static const EigenSolution s = solve_spectrum(assemble_hamiltonian({24, 12.0}, {}), 80);
    return s;
}

}  // namespace

TEST(SolveSpectrum, ResidualsAndOrdering) {
    const EigenSolution& s = small_solution();
    ASSERT_EQ(s.count(), 80);
    EXPECT_LT(s.residuals.maxCoeff(), 1e-8);
    for (int k = 1; k < s.count(); ++k) EXPECT_LE(s.energies[k - 1], s.energies[k]);
}

TEST(SolveSpectrum, MeasureOrthonormal) {
    const EigenSolution& s = small_solution();
    EXPECT_LT(orthonormality_defect(s), 1e-8);
    EXPECT_NEAR(inner_product(s.state(0), s.state(0), s.grid.weights()), 1.0, 1e-12);
    EXPECT_NEAR(inner_product(s.state(3), s.state(7), s.grid.weights()), 0.0, 1e-10);
}

TEST(SolveSpectrum, PhaseConvention) {
    const EigenSolution& s = small_solution();
    for (int k = 0; k < s.count(); ++k) {
        Eigen::Index peak = 0;
        s.states.col(k).cwiseAbs().maxCoeff(&peak);
        EXPECT_GT(s.states(peak, k), 0.0);
    }
}

TEST(SolveSpectrum, AboveSampledPotentialMinimum) {
    const HamiltonianMatrix H = assemble_hamiltonian({24, 12.0}, {});
    EXPECT_GT(small_solution().energies.minCoeff(), H.potential.minCoeff());
}

TEST(SolveSpectrum, KineticOnlyIsNonNegative) {
    const HamiltonianMatrix T = assemble_kinetic({20, 10.0}, {0.5, 1.0, 1.0});
    const EigenSolution s = solve_spectrum(T, 30);
    EXPECT_GE(s.energies.minCoeff(), -1e-12);
}

TEST(SolveSpectrum, HydrogenSeriesInRhoChannel) {
    const int n = 2000;
    const double h = 60.0 / n;
    Tridiagonal H = radial_kinetic_1d(n, h, 1.0);
    for (Eigen::Index k = 0; k < H.size(); ++k) H.diag[k] -= 1.0 / ((k + 1) * h);
    const EigenPairs pairs = lowest_eigenpairs_tridiagonal(H, 3);
    for (int k = 0; k < 3; ++k) {
        const double exact = -1.0 / (4.0 * (k + 1) * (k + 1));
        EXPECT_NEAR(pairs.values[k], exact, 0.03 * std::abs(exact));
    }
}

TEST(SolveSpectrum, ChannelRelabelingSymmetryAtUnitMassRatio) {
    const GridSpec spec{14, 8.0};
    const PhysicalParams params{1.0, 1.0, 1.0};
    const HamiltonianMatrix H = assemble_hamiltonian(spec, params);

    // Same operator with the axes swapped: node (i, j) now stores (rho_i, R_j).
    const int m = H.grid.axis_size();
    const Tridiagonal k1 = radial_kinetic_1d(spec.n, H.grid.spacing(), 1.0);
    Eigen::MatrixXd swapped = Eigen::MatrixXd::Zero(H.dimension(), H.dimension());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const auto p = static_cast<Eigen::Index>(H.grid.flat(i, j));
            swapped(p, p) = k1.diag[i] + k1.diag[j] + potential(H.grid.node(j), H.grid.node(i), params);
            if (i + 1 < m) {
                const auto r = static_cast<Eigen::Index>(H.grid.flat(i + 1, j));
                swapped(p, r) = swapped(r, p) = k1.off[i];
            }
            if (j + 1 < m) {
                const auto r = static_cast<Eigen::Index>(H.grid.flat(i, j + 1));
                swapped(p, r) = swapped(r, p) = k1.off[j];
            }
        }
    const int count = static_cast<int>(H.dimension());
    const EigenPairs a = lowest_eigenpairs_dense(Eigen::MatrixXd(H.matrix), count);
    const EigenPairs b = lowest_eigenpairs_dense(swapped, count);
    for (int k = 0; k < count; ++k) EXPECT_NEAR(a.values[k], b.values[k], 1e-10);
}

TEST(SolveSpectrum, LanczosAgreesWithDense) {
    const HamiltonianMatrix H = assemble_hamiltonian({30, 12.0}, {0.5, 1.0, 1.0});
    const EigenSolution dense = solve_spectrum(H, 12);
    SpectrumOptions krylov;
    krylov.dense_limit = 100;
    const EigenSolution lanczos = solve_spectrum(H, 12, krylov);
    EXPECT_LT(lanczos.residuals.maxCoeff(), 1e-8);
    EXPECT_LT(orthonormality_defect(lanczos), 1e-8);
    for (int k = 0; k < 12; ++k) {
        EXPECT_NEAR(lanczos.energies[k], dense.energies[k], 1e-9);
        // same phase convention, so the states agree as vectors
        EXPECT_LT((lanczos.state(k) - dense.state(k)).cwiseAbs().maxCoeff(),
                  1e-5 * dense.state(k).cwiseAbs().maxCoeff());
    }
}

TEST(SolveSpectrum, UnreachableResidualIsSolverError) {
    const HamiltonianMatrix H = assemble_hamiltonian({12, 6.0}, {});
    SpectrumOptions strict;
    strict.residual_tolerance = 1e-300;
    try {
        solve_spectrum(H, 3, strict);
        FAIL() << "expected SolverError";
    } catch (const SolverError& e) {
        EXPECT_GT(e.worst_residual(), 0.0);
    }
}

TEST(SolveSpectrum, CountPrecondition) {
    const HamiltonianMatrix H = assemble_hamiltonian({10, 5.0}, {});
    EXPECT_THROW(solve_spectrum(H, 0), InvalidSpec);
    EXPECT_THROW(solve_spectrum(H, 82), InvalidSpec);
}

TEST(Psi00Proxy, ConstantState) {
    const RadialGrid g({12, 6.0});
    const auto n = static_cast<Eigen::Index>(g.size());
    EXPECT_DOUBLE_EQ(psi00_proxy(Eigen::VectorXd(Eigen::VectorXd::Constant(n, 2.5)), g), 2.5);
    const std::complex<double> c(0.5, -1.5);
    EXPECT_NEAR(std::abs(psi00_proxy(Eigen::VectorXcd(Eigen::VectorXcd::Constant(n, c)), g, 3) - c), 0.0, 1e-15);
}

TEST(Psi00Proxy, OddStateAveragesToZero) {
    const RadialGrid g({12, 6.0});
    std::mt19937 rng(5);
    std::normal_distribution<double> normal;
    for (int block : {2, 4}) {
        Eigen::VectorXd s = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.size()));
        for (int i = 0; i < g.axis_size(); ++i)
            for (int j = 0; j < block / 2; ++j) {
                // odd under j -> block - 1 - j
                const double v = normal(rng);
                s[static_cast<Eigen::Index>(g.flat(i, j))] = v;
                s[static_cast<Eigen::Index>(g.flat(i, block - 1 - j))] = -v;
            }
        EXPECT_NEAR(psi00_proxy(s, g, block), 0.0, 1e-15);
    }
}

TEST(Psi00Proxy, BlockRange) {
    const RadialGrid g({10, 5.0});
    const Eigen::VectorXd s = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(g.size()));
    EXPECT_THROW(psi00_proxy(s, g, 0), InvalidSpec);
    EXPECT_THROW(psi00_proxy(s, g, 10), InvalidSpec);
    EXPECT_NO_THROW(psi00_proxy(s, g, 9));
}

TEST(I2Collision, Examples) {
    const RadialGrid g({10, 5.0});
    Eigen::VectorXd s = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.size()));
    s[static_cast<Eigen::Index>(g.flat(3, 4))] = 7.0;  // off the innermost column
    EXPECT_EQ(i2_collision(s, g), 0.0);
    s.setZero();
    s[static_cast<Eigen::Index>(g.flat(0, 0))] = 3.0;
    EXPECT_DOUBLE_EQ(i2_collision(s, g), 0.5 * 0.5 * 9.0 * 0.5);
}

TEST(Classify, SingleState) {
    const EigenSolution s = solve_spectrum(assemble_hamiltonian({10, 5.0}, {}), 1);
    const Classification c = classify(s, 0.3);
    ASSERT_EQ(c.reports.size(), 1u);
    EXPECT_EQ(c.reports[0].delta, 0.0);
}

TEST(Classify, DeltasAndFlags) {
    const EigenSolution& s = small_solution();
    const Classification c = classify(s, 0.1);
    for (const auto& r : c.reports) {
        EXPECT_GE(r.delta, 0.0);
        EXPECT_EQ(r.is_triple_collision, std::abs(r.psi00) > 0.1 * r.peak);
        EXPECT_DOUBLE_EQ(r.delta, r.energy - s.energies[0]);
    }
    if (c.designated) {
        for (int k = 0; k < *c.designated; ++k) EXPECT_FALSE(c.reports[k].is_triple_collision);
        EXPECT_TRUE(c.reports[*c.designated].is_triple_collision);
    }
}

TEST(Classify, LoweringTauNeverUnflags) {
    const EigenSolution& s = small_solution();
    const std::vector<double> taus{0.9, 0.5, 0.2, 0.1, 0.05, 0.01, 1e-3, 1e-6};
    for (std::size_t a = 1; a < taus.size(); ++a) {
        const Classification hi = classify(s, taus[a - 1]);
        const Classification lo = classify(s, taus[a]);
        for (std::size_t k = 0; k < hi.reports.size(); ++k)
            if (hi.reports[k].is_triple_collision) EXPECT_TRUE(lo.reports[k].is_triple_collision);
    }
}

TEST(Classify, Reproducible) {
    const EigenSolution& s = small_solution();
    const Classification a = classify(s, 0.1);
    const Classification b = classify(s, 0.1);
    ASSERT_EQ(a.reports.size(), b.reports.size());
    for (std::size_t k = 0; k < a.reports.size(); ++k) {
        EXPECT_EQ(a.reports[k].psi00, b.reports[k].psi00);
        EXPECT_EQ(a.reports[k].i2, b.reports[k].i2);
        EXPECT_EQ(a.reports[k].is_triple_collision, b.reports[k].is_triple_collision);
    }
    EXPECT_EQ(a.designated, b.designated);
}

TEST(Classify, TauRange) {
    EXPECT_THROW(classify(small_solution(), 0.0), InvalidSpec);
    EXPECT_THROW(classify(small_solution(), 1.0), InvalidSpec);
}

TEST(ReferenceStates, LowestUnflaggedAboveGround) {
    Classification c;
    for (int k = 0; k < 6; ++k) c.reports.push_back(StateReport{k});
    c.reports[1].is_triple_collision = true;
    c.reports[3].is_triple_collision = true;
    EXPECT_EQ(reference_states(c, 2), (std::vector<int>{2, 4}));
    EXPECT_EQ(reference_states(c, 5), (std::vector<int>{2, 4, 5}));
}
