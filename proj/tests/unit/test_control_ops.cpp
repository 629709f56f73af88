#include <tricoll/control_ops.hpp>
#include <tricoll/errors.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace tricoll;

namespace {

const EigenSolution& basis() {
    static const EigenSolution s = solve_spectrum(assemble_hamiltonian({20, 10.0}, {}), 40);
    return s;
}

ProjectedOperator from_matrix(Eigen::MatrixXd m) {
    return ProjectedOperator{OperatorKind::dipole, std::move(m)};
}

}  // namespace

TEST(Dipole, PointValues) {
    EXPECT_DOUBLE_EQ(dipole_value(1.0, 1.0), 0.5);
    EXPECT_DOUBLE_EQ(dipole_value(3.0, 1.0), 7.0 / 6.0);
    EXPECT_DOUBLE_EQ(dipole_value(1.0, 3.0), 7.0 / 6.0);
}

TEST(Dipole, DiagonalAndExpandedForms) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.01, 40.0);
    for (int k = 0; k < 1000; ++k) {
        const double t = u(rng);
        EXPECT_NEAR(dipole_value(t, t), t / 2, 1e-12 * t);
        const double R = std::max(u(rng), u(rng)), rho = std::min(u(rng), R);
        if (rho >= R) continue;
        const double expanded = (6 * R * R * rho + 2 * rho * rho * rho) / (16 * R * rho);
        EXPECT_NEAR(dipole_value(R, rho), expanded, 1e-12 * expanded);
    }
}

TEST(Dipole, OperatorSamplesGrid) {
    const RadialGrid g({8, 8.0});
    const ControlOperator op = dipole_operator(g);
    EXPECT_EQ(op.kind, OperatorKind::dipole);
    EXPECT_DOUBLE_EQ(op.diag[static_cast<Eigen::Index>(g.flat(0, 0))], 0.5);
    EXPECT_DOUBLE_EQ(op.diag[static_cast<Eigen::Index>(g.flat(2, 0))], 7.0 / 6.0);
}

TEST(Dipole, VanishesTowardTheOriginLinearly) {
    const RadialGrid g({80, 40.0});
    const ControlOperator op = dipole_operator(g);
    const int mid = 39;  // node (mid+1) h
    const double corner = op.diag[static_cast<Eigen::Index>(g.flat(0, 0))];
    const double centre = op.diag[static_cast<Eigen::Index>(g.flat(mid, mid))];
    EXPECT_NEAR(corner / centre, 1.0 / (mid + 1), 1e-12);
    EXPECT_DOUBLE_EQ(corner, g.spacing() / 2);
}

TEST(Diamagnetic, Examples) {
    const RadialGrid g({10, 5.0});
    const PhysicalParams p{2.7e-4, 1.0, 1.0};
    const ControlOperator pure = diamagnetic_operator(g, p, 1.0, 0.0);
    const ControlOperator zero = diamagnetic_operator(g, p, 0.0, 0.0);
    for (std::size_t k = 0; k < g.size(); ++k) {
        EXPECT_DOUBLE_EQ(pure.diag[static_cast<Eigen::Index>(k)], g.rho_at(k) * g.rho_at(k));
        EXPECT_EQ(zero.diag[static_cast<Eigen::Index>(k)], 0.0);
    }
    // R = 10, rho = 1 on a unit grid
    const RadialGrid unit({16, 16.0});
    const ControlOperator both = diamagnetic_operator(unit, p, 1.0, 1.0);
    EXPECT_NEAR(both.diag[static_cast<Eigen::Index>(unit.flat(9, 0))], 1.027, 1e-14);
    EXPECT_THROW(diamagnetic_operator(g, p, -1.0, 0.0), InvalidSpec);
}

TEST(Magnetic, IsDipolePlusRhoSquared) {
    const RadialGrid g({8, 8.0});
    const ControlOperator m = magnetic_control_operator(g);
    EXPECT_DOUBLE_EQ(m.diag[static_cast<Eigen::Index>(g.flat(0, 0))], 1.5);
    EXPECT_DOUBLE_EQ(m.diag[static_cast<Eigen::Index>(g.flat(2, 0))], 13.0 / 6.0);

    const RadialGrid big({31, 12.0});
    const ControlOperator sum = magnetic_control_operator(big);
    const ControlOperator d = dipole_operator(big);
    const ControlOperator dia = diamagnetic_operator(big, {}, 1.0, 0.0);
    EXPECT_EQ((sum.diag - (d.diag + dia.diag)).cwiseAbs().maxCoeff(), 0.0);
}

TEST(OperatorKind, ParseAndPrint) {
    EXPECT_EQ(parse_operator_kind("dipole"), OperatorKind::dipole);
    EXPECT_EQ(parse_operator_kind("magnetic"), OperatorKind::magnetic_combined);
    EXPECT_EQ(parse_operator_kind("diamagnetic"), OperatorKind::diamagnetic);
    EXPECT_EQ(to_string(OperatorKind::magnetic_combined), "magnetic");
    EXPECT_THROW(parse_operator_kind("quadrupole"), InvalidSpec);
}

TEST(Project, IdentityMultiplierGivesIdentity) {
    ControlOperator one{OperatorKind::diamagnetic, basis().grid,
                        Eigen::VectorXd::Ones(static_cast<Eigen::Index>(basis().grid.size()))};
    const ProjectedOperator B = project(one, basis());
    EXPECT_LT((B.matrix - Eigen::MatrixXd::Identity(40, 40)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(Project, SymmetricWithNonNegativeGroundExpectation) {
    for (auto kind : {OperatorKind::dipole, OperatorKind::diamagnetic, OperatorKind::magnetic_combined}) {
        const ControlOperator op = make_operator(kind, basis().grid, {});
        const ProjectedOperator B = project(op, basis());
        EXPECT_EQ(B.size(), 40);
        EXPECT_LT((B.matrix - B.matrix.transpose()).cwiseAbs().maxCoeff(), 1e-10);
        const Eigen::VectorXd g = basis().state(0);
        const double expectation =
            (g.array().square() * op.diag.array() * basis().grid.weights().full.array()).sum();
        EXPECT_NEAR(B.matrix(0, 0), expectation, 1e-10 * expectation);
        EXPECT_GE(B.matrix(0, 0), 0.0);
    }
}

TEST(Project, TruncatedBasis) {
    const ProjectedOperator full = project(dipole_operator(basis().grid), basis());
    const ProjectedOperator part = project(dipole_operator(basis().grid), basis(), 10);
    EXPECT_EQ(part.size(), 10);
    EXPECT_LT((part.matrix - full.matrix.topLeftCorner(10, 10)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_THROW(project(dipole_operator(basis().grid), basis(), 41), DimensionMismatch);
}

TEST(Project, GridMismatch) {
    EXPECT_THROW(project(dipole_operator(RadialGrid({12, 10.0})), basis()), DimensionMismatch);
}

TEST(TransitivityScan, DiagonalOperatorIsIntransitive) {
    const Eigen::VectorXd d = Eigen::VectorXd::LinSpaced(6, 1.0, 6.0);
    const auto t = transitivity_scan(from_matrix(d.asDiagonal()), 0, 3, 20);
    ASSERT_EQ(t.size(), 20u);
    for (double v : t) EXPECT_EQ(v, 0.0);
}

TEST(TransitivityScan, RankOneOperator) {
    const int K = 9;
    const auto t = transitivity_scan(from_matrix(Eigen::MatrixXd::Ones(K, K)), 2, 7, 10);
    for (double v : t) EXPECT_NEAR(v, 1.0 / std::sqrt(K), 1e-15);
}

TEST(TransitivityScan, ScaleInvariance) {
    const ProjectedOperator B = project(magnetic_control_operator(basis().grid), basis());
    const auto base = transitivity_scan(B, 0, 17, 30);
    for (double c : {1e-3, 2.5, 1e4}) {
        const auto scaled = transitivity_scan(from_matrix(c * B.matrix), 0, 17, 30);
        for (std::size_t n = 0; n < base.size(); ++n) EXPECT_NEAR(scaled[n], base[n], 1e-12);
    }
}

TEST(TransitivityScan, MatchesUnnormalizedPowers) {
    std::mt19937 rng(9);
    std::normal_distribution<double> normal;
    Eigen::MatrixXd A(6, 6);
    for (Eigen::Index i = 0; i < 36; ++i) A.data()[i] = normal(rng);
    A = 0.5 * (A + A.transpose()).eval();
    const auto t = transitivity_scan(from_matrix(A), 1, 4, 8);
    Eigen::VectorXd v = Eigen::VectorXd::Unit(6, 1);
    for (int n = 1; n <= 8; ++n) {
        v = A * v;
        EXPECT_NEAR(t[static_cast<std::size_t>(n - 1)], std::abs(v[4]) / v.norm(), 1e-13);
    }
}

TEST(TransitivityScan, Preconditions) {
    const ProjectedOperator B = from_matrix(Eigen::MatrixXd::Identity(4, 4));
    EXPECT_THROW(transitivity_scan(B, 0, 4, 3), InvalidSpec);
    EXPECT_THROW(transitivity_scan(B, 0, 1, 0), InvalidSpec);
    EXPECT_EQ(transitivity_scan(B, 0, 1, 1).size(), 1u);
}
