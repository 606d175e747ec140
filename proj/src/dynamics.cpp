#include "crn/dynamics.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace crn {

namespace {

constexpr double kClipTolerance = 1e-12;

Eigen::MatrixXd laplacian_double(const Network& net, const RateAssignment& rates) {
    RationalMatrix a = laplacian_matrix(net, rates);
    Eigen::MatrixXd out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).to_double();
    return out;
}

Eigen::VectorXd rhs_with(const Network& net, const Eigen::MatrixXd& a, const Eigen::MatrixXd& y,
                         const Eigen::VectorXd& c) {
    return (psi(net, c).transpose() * a * y).transpose();
}

}  // namespace

Eigen::VectorXd mass_action_rhs(const Network& net, const RateAssignment& rates,
                                const Eigen::VectorXd& c) {
    return rhs_with(net, laplacian_double(net, rates), net.exponent_matrix().cast<double>(), c);
}

Trajectory integrate(const Network& net, const RateAssignment& rates, const Eigen::VectorXd& c0,
                     const IntegrateOptions& options) {
    if (options.t_end <= 0) throw std::invalid_argument("t_end must be positive");
    if (options.dt <= 0) throw std::invalid_argument("dt must be positive");
    if (c0.size() != net.num_species())
        throw std::invalid_argument("initial state length does not match species count");
    if ((c0.array() < 0).any()) throw std::invalid_argument("initial concentrations must be nonnegative");

    const Eigen::MatrixXd a = laplacian_double(net, rates);
    const Eigen::MatrixXd y = net.exponent_matrix().cast<double>();
    auto f = [&](const Eigen::VectorXd& c) { return rhs_with(net, a, y, c); };

    Trajectory trajectory;
    const auto steps = static_cast<long>(std::ceil(options.t_end / options.dt - 1e-9));
    trajectory.times.reserve(steps + 1);
    trajectory.states.reserve(steps + 1);
    trajectory.times.push_back(0.0);
    trajectory.states.push_back(c0);

    Eigen::VectorXd c = c0;
    int quiet_steps = 0;
    for (long step = 1; step <= steps; ++step) {
        const double dt = options.dt;
        Eigen::VectorXd k1 = f(c);
        Eigen::VectorXd k2 = f(c + 0.5 * dt * k1);
        Eigen::VectorXd k3 = f(c + 0.5 * dt * k2);
        Eigen::VectorXd k4 = f(c + dt * k3);
        c += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (!c.allFinite()) throw std::runtime_error("integration produced a non-finite state");
        for (int j = 0; j < c.size(); ++j) {
            if (c[j] < 0) {
                if (c[j] < -kClipTolerance)
                    throw std::runtime_error("concentration went negative; step size too large");
                c[j] = 0.0;
            }
        }

        trajectory.times.push_back(step * options.dt);
        trajectory.states.push_back(c);

        if (options.stop_at_equilibrium) {
            quiet_steps = f(c).lpNorm<Eigen::Infinity>() < options.equilibrium_tol ? quiet_steps + 1 : 0;
            if (quiet_steps >= options.equilibrium_steps) break;
        }
    }
    return trajectory;
}

double conservation_residual(const Trajectory& trajectory, const Network& net) {
    if (trajectory.states.empty()) return 0.0;
    double residual = 0.0;
    for (const Eigen::VectorXi& v : conservation_basis(net)) {
        Eigen::VectorXd vd = v.cast<double>();
        const double initial = vd.dot(trajectory.states.front());
        for (const auto& state : trajectory.states)
            residual = std::max(residual, std::abs(vd.dot(state) - initial));
    }
    return residual;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory, const Network& net) {
    os << "t";
    for (const auto& name : net.species()) os << ",c_" << name;
    os << "\n";
    char buffer[64];
    for (size_t i = 0; i < trajectory.times.size(); ++i) {
        std::snprintf(buffer, sizeof(buffer), "%.12g", trajectory.times[i]);
        os << buffer;
        for (int j = 0; j < trajectory.states[i].size(); ++j) {
            std::snprintf(buffer, sizeof(buffer), "%.12g", trajectory.states[i][j]);
            os << "," << buffer;
        }
        os << "\n";
    }
}

}  // namespace crn
