#ifndef WFSMC_KERNELS_GIBBS_TRUNCATED_HPP
#define WFSMC_KERNELS_GIBBS_TRUNCATED_HPP

#include <Eigen/Dense>
#include <vector>

#include "wfsmc/rng.hpp"

namespace wfsmc {

/// One systematic Gibbs sweep over the first t coordinates of a state
/// constrained by the lower-triangular system (Gamma x)_u >= a_u, u < t.
/// The target is N(0, I_t) restricted to that set; each coordinate is
/// resampled, in fixed ascending order, from its full conditional: a
/// standard normal truncated to the interval [lo, hi] aggregated over every
/// row u >= s in which x_s appears, with positive coefficients contributing
/// lower bounds and negative coefficients upper bounds. Rows below the
/// current coordinate never involve it, so the sweep leaves the whole
/// constraint set satisfied.
///
/// Throws InfeasibleStateError if the incoming state violates a constraint
/// (that is an upstream bug, not a recoverable event).
void gibbs_truncated_sweep(std::vector<double>& state, const Eigen::MatrixXd& gamma,
                           const Eigen::VectorXd& a, RngStream& rng);

}  // namespace wfsmc

#endif
