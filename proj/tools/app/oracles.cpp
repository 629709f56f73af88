#include "oracles.hpp"

#include <tricoll/eigensolvers.hpp>
#include <tricoll/hamiltonian.hpp>
#include <tricoll/io.hpp>
#include <tricoll/propagation.hpp>

#include <algorithm>
#include <cmath>

namespace tricoll::app {

OracleResult hydrogen_oracle() {
    constexpr int n = 2000;
    constexpr double L = 60.0;
    constexpr double charge = 1.0;
    const double h = L / n;

    Tridiagonal H = radial_kinetic_1d(n, h, 1.0);
    for (Eigen::Index k = 0; k < H.size(); ++k) H.diag[k] -= charge / ((k + 1) * h);
    const EigenPairs pairs = lowest_eigenpairs_tridiagonal(H, 3);

    OracleResult r{"hydrogen", true, 0.0, 0.03, {}};
    for (int k = 0; k < 3; ++k) {
        const double exact = -charge * charge / (4.0 * (k + 1) * (k + 1));
        const double rel = std::abs(pairs.values[k] - exact) / std::abs(exact);
        r.worst = std::max(r.worst, rel);
        r.detail += "E" + std::to_string(k + 1) + "=" + format_double(pairs.values[k]) + " ";
    }
    r.passed = r.worst < r.tolerance;
    return r;
}

OracleResult rabi_oracle() {
    const Eigen::Vector2d energies(0.0, 1.0);
    Eigen::Matrix2d B;
    B << 0.0, 1.0, 1.0, 0.0;
    const double field = 0.3;
    const double dt = 0.05;
    // generator [[0, -f], [-f, 1]]: detuning 1, coupling f
    const double omega = std::sqrt(1.0 + 4.0 * field * field);

    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(2);
    psi[0] = 1.0;
    OracleResult r{"rabi", true, 0.0, 1e-10, {}};
    for (int s = 1; s <= 400; ++s) {
        psi = step(psi, energies, Eigen::MatrixXd(B), field, dt);
        const double t = s * dt;
        const double sn = std::sin(0.5 * omega * t);
        const double exact = 4.0 * field * field / (omega * omega) * sn * sn;
        r.worst = std::max(r.worst, std::abs(std::norm(psi[1]) - exact));
    }
    r.passed = r.worst < r.tolerance;
    r.detail = "400 steps, field 0.3";
    return r;
}

std::vector<OracleResult> run_oracles() { return {hydrogen_oracle(), rabi_oracle()}; }

}  // namespace tricoll::app
