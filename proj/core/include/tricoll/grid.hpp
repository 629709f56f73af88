#pragma once

#include <Eigen/Core>

#include <complex>
#include <cstddef>

namespace tricoll {

// Box [0, L]^2 cut into n cells per axis. Interior nodes sit at k*h for
// k = 1..n-1: the origin (singular point) and the wall at L (Dirichlet) are
// excluded, so each axis carries n-1 unknowns.
struct GridSpec {
    int n = 80;
    double L = 40.0;

    double spacing() const { return L / n; }
    int points_per_axis() const { return n - 1; }
    std::size_t unknowns() const {
        return static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1);
    }

    // Throws InvalidSpec for n < 8 or L <= 0.
    void validate() const;
};

// Radial measure R^2 dR rho^2 drho sampled on the nodes. Separable:
// w(i, j) = radial(i) * radial(j) with radial(k) = r_k^2 h.
struct MeasureWeights {
    Eigen::VectorXd radial;  // per-axis factor, size n-1
    Eigen::VectorXd full;    // flattened w(i, j), size (n-1)^2

    double at(int i, int j) const { return radial[i] * radial[j]; }
};

// Tensor grid over (R, rho). Flat index of node (i, j) is i * (n-1) + j with
// i the R index and j the rho index, both zero-based (node i sits at (i+1) h).
class RadialGrid {
public:
    explicit RadialGrid(GridSpec spec);

    const GridSpec& spec() const { return spec_; }
    double spacing() const { return spec_.spacing(); }
    int axis_size() const { return spec_.points_per_axis(); }
    std::size_t size() const { return spec_.unknowns(); }

    const Eigen::VectorXd& nodes() const { return nodes_; }
    double node(int k) const { return nodes_[k]; }
    const MeasureWeights& weights() const { return weights_; }

    std::size_t flat(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(axis_size()) +
               static_cast<std::size_t>(j);
    }
    double R_at(std::size_t flat_index) const { return nodes_[flat_index / axis_size()]; }
    double rho_at(std::size_t flat_index) const { return nodes_[flat_index % axis_size()]; }

    bool operator==(const RadialGrid& other) const {
        return spec_.n == other.spec_.n && spec_.L == other.spec_.L;
    }

private:
    GridSpec spec_;
    Eigen::VectorXd nodes_;
    MeasureWeights weights_;
};

// Validates the spec and returns the grid with its nodes and measure weights.
RadialGrid build_grid(const GridSpec& spec);

// sum conj(f) g w over all nodes. Throws DimensionMismatch if sizes differ.
std::complex<double> inner_product(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g,
                                   const MeasureWeights& weights);
double inner_product(const Eigen::VectorXd& f, const Eigen::VectorXd& g,
                     const MeasureWeights& weights);

}  // namespace tricoll
