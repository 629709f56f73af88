#include "tricoll/grid.hpp"

#include "tricoll/errors.hpp"

#include <string>

namespace tricoll {

void GridSpec::validate() const {
    if (n < 8)
        throw InvalidSpec("grid needs n >= 8 points per axis, got " + std::to_string(n));
    if (!(L > 0.0))
        throw InvalidSpec("box length L must be positive");
}

RadialGrid::RadialGrid(GridSpec spec) : spec_(spec) {
    spec_.validate();
    const int m = axis_size();
    const double h = spacing();

    nodes_.resize(m);
    weights_.radial.resize(m);
    for (int k = 0; k < m; ++k) {
        nodes_[k] = (k + 1) * h;
        weights_.radial[k] = nodes_[k] * nodes_[k] * h;
    }

    weights_.full.resize(static_cast<Eigen::Index>(size()));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            weights_.full[static_cast<Eigen::Index>(flat(i, j))] = weights_.at(i, j);
}

RadialGrid build_grid(const GridSpec& spec) { return RadialGrid(spec); }

std::complex<double> inner_product(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g,
                                   const MeasureWeights& weights) {
    if (f.size() != g.size() || f.size() != weights.full.size())
        throw DimensionMismatch("inner_product: grid function sizes differ");
    return (f.conjugate().array() * g.array() * weights.full.array()).sum();
}

double inner_product(const Eigen::VectorXd& f, const Eigen::VectorXd& g,
                     const MeasureWeights& weights) {
    if (f.size() != g.size() || f.size() != weights.full.size())
        throw DimensionMismatch("inner_product: grid function sizes differ");
    return (f.array() * g.array() * weights.full.array()).sum();
}

}  // namespace tricoll
