#ifndef CRN_DYNAMICS_HPP
#define CRN_DYNAMICS_HPP

#include "crn/network.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <vector>

namespace crn {

struct Trajectory {
    std::vector<double> times;
    std::vector<Eigen::VectorXd> states;
};

/// dc/dt = Psi(c) . A_k . Y, evaluated in floating point.
Eigen::VectorXd mass_action_rhs(const Network& net, const RateAssignment& rates,
                                const Eigen::VectorXd& c);

struct IntegrateOptions {
    double t_end = 1.0;
    double dt = 1e-3;
    /// Stop once the sup norm of the right-hand side stays below
    /// equilibrium_tol for equilibrium_steps consecutive steps.
    bool stop_at_equilibrium = true;
    double equilibrium_tol = 1e-10;
    int equilibrium_steps = 100;
};

/// Classic fixed-step fourth-order Runge-Kutta. States that undershoot
/// zero by less than 1e-12 are clipped to zero; a larger undershoot or a
/// non-finite value raises std::runtime_error (step size too large).
Trajectory integrate(const Network& net, const RateAssignment& rates, const Eigen::VectorXd& c0,
                     const IntegrateOptions& options);

/// max over the trajectory and over an integer conservation basis v of
/// |v . c(t) - v . c(0)|.
double conservation_residual(const Trajectory& trajectory, const Network& net);

/// CSV with header `t,c_<species1>,...`, one row per step.
void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory, const Network& net);

}  // namespace crn

#endif  // CRN_DYNAMICS_HPP
