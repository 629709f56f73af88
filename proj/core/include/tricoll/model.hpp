#pragma once

// Physical constants and potentials of the reduced three-body Coulomb problem.
//
// Everything is expressed in dimensionless "H-units": lengths scaled by the
// inverse Bohr-like scale of the light particle, energies by 2m/(hbar^2 G^4),
// hbar = 1. The system is two positive charges Z (mass M) and one negative
// charge q (mass m); R is the positive-positive separation and rho the
// distance of the negative charge to one of the positive ones.

namespace tricoll {

struct PhysicalParams {
    double mu = 2.7e-4;  // m / M, roughly electron over deuteron
    double Z = 1.0;
    double q = 1.0;

    // Throws InvalidSpec unless mu, Z and q are all strictly positive.
    void validate() const;
};

// Angle-averaged potential of maximally symmetric states,
//   Z/R - q/rho - q/max(R, rho).
// On the diagonal R == rho the cross term is counted once, which is the exact
// angular average of the 3-D Coulomb interaction.
// Throws std::domain_error for R <= 0 or rho <= 0.
double potential(double R, double rho, const PhysicalParams& params);

// Unreduced potential with the angle theta between the two separation vectors,
//   Z/R - q/rho - q/sqrt(R^2 + rho^2 - 2 R rho cos(theta)).
// Throws std::domain_error at coincidence points.
double potential_3d(double R, double rho, double theta, const PhysicalParams& params);

// Boundary of the attractive region inside rho < R: the potential there is
// (Z - q)/R - q/rho, negative iff rho < q R / (Z - q). Returns +infinity when
// Z <= q, i.e. the whole inner region is attractive.
double attractive_boundary(double R, const PhysicalParams& params);

}  // namespace tricoll
