#include "tricoll/model.hpp"

#include "tricoll/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tricoll {

void PhysicalParams::validate() const {
    if (!(mu > 0.0) || !(Z > 0.0) || !(q > 0.0))
        throw InvalidSpec("physical parameters mu, Z, q must all be positive");
}

double potential(double R, double rho, const PhysicalParams& params) {
    if (!(R > 0.0) || !(rho > 0.0))
        throw std::domain_error("potential: R and rho must be positive");
    return params.Z / R - params.q / rho - params.q / std::max(R, rho);
}

double potential_3d(double R, double rho, double theta, const PhysicalParams& params) {
    if (!(R > 0.0) || !(rho > 0.0))
        throw std::domain_error("potential_3d: R and rho must be positive");
    const double sep2 = R * R + rho * rho - 2.0 * R * rho * std::cos(theta);
    if (!(sep2 > 0.0))
        throw std::domain_error("potential_3d: coincident particles");
    return params.Z / R - params.q / rho - params.q / std::sqrt(sep2);
}

double attractive_boundary(double R, const PhysicalParams& params) {
    if (!(R > 0.0))
        throw std::domain_error("attractive_boundary: R must be positive");
    const double excess = params.Z - params.q;
    if (excess <= 0.0)
        return std::numeric_limits<double>::infinity();
    return params.q * R / excess;
}

}  // namespace tricoll
