#include <tricoll/errors.hpp>
#include <tricoll/model.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

using namespace tricoll;

namespace {

const PhysicalParams unit_charges{2.7e-4, 1.0, 1.0};

// 1/2 int_{-1}^{1} dx / sqrt(R^2 + rho^2 - 2 R rho x), adaptive Gauss-Kronrod.
double angular_average(double R, double rho) {
    auto f = [&](double x) { return 1.0 / std::sqrt(R * R + rho * rho - 2.0 * R * rho * x); };
    return 0.5 * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -1.0, 1.0, 20,
                                                                                1e-13);
}

}  // namespace

TEST(Potential, DirectSubstitution) {
    EXPECT_DOUBLE_EQ(potential(2.0, 1.0, unit_charges), -1.0);
    EXPECT_DOUBLE_EQ(potential(1.0, 2.0, unit_charges), 0.0);
    EXPECT_DOUBLE_EQ(potential(2.0, 1.0, {2.7e-4, 2.0, 1.0}), -0.5);
}

TEST(Potential, DiagonalCountsCrossTermOnce) {
    EXPECT_DOUBLE_EQ(potential(1.0, 1.0, unit_charges), 1.0 - 1.0 - 1.0);
}

TEST(Potential, RejectsNonPositiveCoordinates) {
    EXPECT_THROW(potential(0.0, 1.0, unit_charges), std::domain_error);
    EXPECT_THROW(potential(1.0, -1.0, unit_charges), std::domain_error);
}

TEST(Potential3d, Examples) {
    EXPECT_DOUBLE_EQ(potential_3d(1.0, 1.0, std::numbers::pi, unit_charges), -0.5);
    EXPECT_NEAR(potential_3d(3.0, 4.0, std::numbers::pi / 2, unit_charges),
                1.0 / 3 - 1.0 / 4 - 1.0 / 5, 1e-15);
    EXPECT_THROW(potential_3d(1.0, 1.0, 0.0, unit_charges), std::domain_error);
}

TEST(Potential3d, AngularAverageAtTwoOne) {
    EXPECT_NEAR(angular_average(2.0, 1.0), 0.5, 1e-13);
}

TEST(Potential3d, AngularAverageMatchesReducedPotential) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coord(0.05, 30.0);
    for (int trial = 0; trial < 200; ++trial) {
        double R = coord(rng);
        double rho = coord(rng);
        if (std::abs(R - rho) < 1e-3) rho += 0.5;
        const double avg = angular_average(R, rho);
        EXPECT_NEAR(avg, 1.0 / std::max(R, rho), 1e-8 / std::max(R, rho)) << R << ' ' << rho;

        // potential_3d averaged over cos(theta) reproduces the reduced potential
        auto v = [&](double x) { return potential_3d(R, rho, std::acos(x), unit_charges); };
        const double v_avg =
            0.5 * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(v, -1.0, 1.0, 20,
                                                                                1e-13);
        EXPECT_NEAR(v_avg, potential(R, rho, unit_charges),
                    1e-8 * (1.0 + std::abs(potential(R, rho, unit_charges))));
    }
}

TEST(Potential, BranchClosedForms) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(0.01, 50.0);
    std::uniform_real_distribution<double> charge(0.2, 4.0);
    for (int trial = 0; trial < 500; ++trial) {
        const PhysicalParams p{2.7e-4, charge(rng), charge(rng)};
        const double a = coord(rng);
        const double b = coord(rng);
        const double R = std::max(a, b);
        const double rho = std::min(a, b);
        if (R == rho) continue;
        EXPECT_NEAR(potential(R, rho, p), (p.Z - p.q) / R - p.q / rho, 1e-12 * (1 + p.Z / rho));
        EXPECT_NEAR(potential(rho, R, p), p.Z / rho - p.q / R - p.q / R, 1e-12 * (1 + p.Z / rho));
    }
}

TEST(AttractiveBoundary, Examples) {
    EXPECT_DOUBLE_EQ(attractive_boundary(1.0, {2.7e-4, 2.0, 1.0}), 1.0);
    EXPECT_DOUBLE_EQ(attractive_boundary(3.0, {2.7e-4, 3.0, 1.0}), 1.5);
    EXPECT_EQ(attractive_boundary(1.0, unit_charges), std::numeric_limits<double>::infinity());
}

TEST(AttractiveBoundary, SignOfPotentialInInnerRegion) {
    const PhysicalParams p{2.7e-4, 2.0, 1.0};
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int a = 0; a < 100; ++a) {
        const double R = 0.1 + 20.0 * unit(rng);
        for (int b = 0; b < 100; ++b) {
            const double rho = R * (1e-6 + (1.0 - 2e-6) * unit(rng));
            const double bound = attractive_boundary(R, p);
            if (std::abs(rho - bound) < 1e-9 * R) continue;
            EXPECT_EQ(potential(R, rho, p) < 0.0, rho < bound) << R << ' ' << rho;
        }
    }
}

TEST(PhysicalParams, Validation) {
    EXPECT_NO_THROW(PhysicalParams{}.validate());
    EXPECT_THROW((PhysicalParams{0.0, 1.0, 1.0}.validate()), InvalidSpec);
    EXPECT_THROW((PhysicalParams{1.0, -1.0, 1.0}.validate()), InvalidSpec);
    EXPECT_THROW((PhysicalParams{1.0, 1.0, 0.0}.validate()), InvalidSpec);
}
