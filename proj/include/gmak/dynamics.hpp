#ifndef GMAK_DYNAMICS_HPP
#define GMAK_DYNAMICS_HPP

#include <Eigen/Dense>
#include <ostream>
#include <vector>

#include "gmak/exactla.hpp"
#include "gmak/network.hpp"

namespace gmak {

// Species formation rate r(c) = sum k_{y->y'} c^{ytilde} (y' - y).
Eigen::VectorXd formation_rate(const GeneralizedNetwork& net, const std::vector<Rational>& rates,
                               const Eigen::VectorXd& c);

// Analytic derivative d r_s / d c_sigma. Requires c_sigma > 0 wherever a
// kinetic complex has a positive exponent on sigma.
Eigen::MatrixXd rate_jacobian(const GeneralizedNetwork& net, const std::vector<Rational>& rates,
                              const Eigen::VectorXd& c);

struct Trajectory {
    std::vector<double> times;            // strictly increasing, starts at 0
    std::vector<Eigen::VectorXd> states;  // componentwise >= 0
    long rejected_steps = 0;
};

// Embedded Dormand-Prince 4(5) with PI step control. Steps producing a
// negative component are rejected and retried at half the step; the run aborts
// (NumericsError) below the minimum step 1e-14 * t_end or on non-finite state.
Trajectory integrate(const GeneralizedNetwork& net, const std::vector<Rational>& rates,
                     const Eigen::VectorXd& c0, double t_end, double rtol = 1e-8, double atol = 1e-10);

// Per basis vector, max over time of |<c(t) - c(0), v^i>|.
std::vector<double> conservation_residuals(const Trajectory& traj, const SubspaceBasis& sperp);

// Header `t,<species names>`, one row per accepted step, 17 significant digits.
void write_csv(std::ostream& out, const GeneralizedNetwork& net, const Trajectory& traj);

}  // namespace gmak

#endif
