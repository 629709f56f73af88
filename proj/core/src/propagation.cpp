#include "tricoll/propagation.hpp"

#include "tricoll/eigensolvers.hpp"
#include "tricoll/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <string>

namespace tricoll {

namespace {

using cplx = std::complex<double>;

constexpr double kDarkField = 1e-14;

template <typename Matrix>
double feedback_impl(const Eigen::VectorXcd& psi, int target, const Matrix& B, double alpha) {
    if (target < 0 || target >= psi.size())
        throw InvalidSpec("epsilon_feedback: target outside the basis");
    const cplx toward_target = std::conj(psi[target]);
    const cplx coupling = (B.row(target).template cast<cplx>() * psi).value();
    return -alpha * std::imag(toward_target * coupling);
}

Eigen::VectorXcd free_phases(const Eigen::VectorXcd& psi, const Eigen::VectorXd& energies,
                             double dt) {
    Eigen::VectorXcd out(psi.size());
    for (Eigen::Index k = 0; k < psi.size(); ++k)
        out[k] = std::polar(1.0, -energies[k] * dt) * psi[k];
    return out;
}

Eigen::VectorXcd step_real(const Eigen::VectorXcd& psi, const Eigen::VectorXd& energies,
                           const Eigen::MatrixXd& B, double epsilon, double dt) {
    if (epsilon == 0.0 || dt == 0.0)
        return dt == 0.0 ? psi : free_phases(psi, energies, dt);
    Eigen::MatrixXd generator = -epsilon * B;
    generator.diagonal() += energies;
    const EigenPairs eig = symmetric_eigen(generator);
    const Eigen::MatrixXcd V = eig.vectors.cast<cplx>();
    Eigen::VectorXcd coeffs = V.transpose() * psi;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k)
        coeffs[k] *= std::polar(1.0, -eig.values[k] * dt);
    return V * coeffs;
}

Eigen::VectorXcd step_complex(const Eigen::VectorXcd& psi, const Eigen::VectorXd& energies,
                              const Eigen::MatrixXcd& B, double epsilon, double dt) {
    if (epsilon == 0.0 || dt == 0.0)
        return dt == 0.0 ? psi : free_phases(psi, energies, dt);
    Eigen::MatrixXcd generator = -epsilon * B;
    generator.diagonal() += energies.cast<cplx>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(generator);
    if (eig.info() != Eigen::Success)
        throw SolverError("step: Hermitian eigendecomposition failed", 0, std::nan(""));
    const Eigen::MatrixXcd& V = eig.eigenvectors();
    Eigen::VectorXcd coeffs = V.adjoint() * psi;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k)
        coeffs[k] *= std::polar(1.0, -eig.eigenvalues()[k] * dt);
    return V * coeffs;
}

template <typename Matrix>
void check_shapes(const Eigen::VectorXcd& psi, const Eigen::VectorXd& energies, const Matrix& B) {
    if (psi.size() != energies.size() || B.rows() != psi.size() || B.cols() != psi.size())
        throw DimensionMismatch("step: amplitudes, energies and operator sizes differ");
}

TraceRecord make_record(int step_index, double time, const Eigen::VectorXcd& psi, int target,
                        double epsilon) {
    TraceRecord r;
    r.step = step_index;
    r.time = time;
    r.overlap = std::abs(psi[target]);
    r.M = lyapunov_value(psi, target);
    r.epsilon = epsilon;
    r.norm = psi.norm();
    return r;
}

template <typename Matrix>
ControlTrace loop_impl(const Eigen::VectorXd& energies, const Matrix& B,
                       const ControlConfig& config) {
    const auto K = static_cast<int>(energies.size());
    config.validate(K);
    if (B.rows() != K || B.cols() != K)
        throw DimensionMismatch("run_control: operator size does not match the energies");

    ControlTrace trace;
    trace.alpha = config.alpha;
    trace.target = config.target;
    trace.basis_size = K;
    trace.records.reserve(static_cast<std::size_t>(config.n_steps) + 1);

    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(K);
    psi[0] = 1.0;
    trace.records.push_back(make_record(0, 0.0, psi, config.target, 0.0));

    const double sub_dt = config.dt / config.substeps;
    for (int it = 1; it <= config.n_steps; ++it) {
        double epsilon = 0.0;
        for (int s = 0; s < config.substeps; ++s) {
            epsilon = epsilon_feedback(psi, config.target, B, config.alpha);
            if (it == 1 && s == 0 && std::abs(epsilon) < kDarkField) {
                epsilon = config.kick_field;
                trace.kicked = true;
            }
            psi = step(psi, energies, B, epsilon, sub_dt);
        }
        trace.records.push_back(make_record(it, it * config.dt, psi, config.target, epsilon));
    }
    trace.final_amplitudes = psi;
    return trace;
}

}  // namespace

void ControlConfig::validate(int available) const {
    if (!(dt > 0.0)) throw InvalidSpec("control: dt must be positive");
    if (!(alpha > 0.0)) throw InvalidSpec("control: alpha must be positive");
    if (n_steps < 0) throw InvalidSpec("control: n_steps must be non-negative");
    if (substeps < 1) throw InvalidSpec("control: substeps must be >= 1");
    if (available < 1) throw InvalidSpec("control: empty eigenbasis");
    if (target < 0 || target >= available)
        throw InvalidSpec("control: target " + std::to_string(target) +
                          " outside a basis of " + std::to_string(available) + " states");
}

double lyapunov_value(const Eigen::VectorXcd& psi, int target) {
    if (target < 0 || target >= psi.size())
        throw InvalidSpec("lyapunov_value: target outside the basis");
    return std::norm(psi[target]);
}

double epsilon_feedback(const Eigen::VectorXcd& psi, int target, const Eigen::MatrixXd& B,
                        double alpha) {
    return feedback_impl(psi, target, B, alpha);
}

double epsilon_feedback(const Eigen::VectorXcd& psi, int target, const Eigen::MatrixXcd& B,
                        double alpha) {
    return feedback_impl(psi, target, B, alpha);
}

Eigen::VectorXcd step(const Eigen::VectorXcd& psi, const Eigen::VectorXd& energies,
                      const Eigen::MatrixXd& B, double epsilon, double dt) {
    check_shapes(psi, energies, B);
    return step_real(psi, energies, B, epsilon, dt);
}

Eigen::VectorXcd step(const Eigen::VectorXcd& psi, const Eigen::VectorXd& energies,
                      const Eigen::MatrixXcd& B, double epsilon, double dt) {
    check_shapes(psi, energies, B);
    return step_complex(psi, energies, B, epsilon, dt);
}

ControlTrace run_control_loop(const Eigen::VectorXd& energies, const Eigen::MatrixXd& B,
                              const ControlConfig& config) {
    return loop_impl(energies, B, config);
}

ControlTrace run_control_loop(const Eigen::VectorXd& energies, const Eigen::MatrixXcd& B,
                              const ControlConfig& config) {
    return loop_impl(energies, B, config);
}

ControlTrace run_control(const ControlConfig& config, const EigenSolution& solution,
                         const ControlOperator& op) {
    config.validate(solution.count());
    if (config.basis_size < 1 || config.basis_size > solution.count())
        throw InvalidSpec("control: basis size must be in [1, retained states]");
    config.validate(config.basis_size);

    const ProjectedOperator B = project(op, solution, config.basis_size);
    ControlTrace trace =
        run_control_loop(solution.energies.head(config.basis_size), B.matrix, config);
    trace.final_state =
        solution.states.leftCols(config.basis_size).cast<std::complex<double>>() *
        trace.final_amplitudes;
    return trace;
}

}  // namespace tricoll
