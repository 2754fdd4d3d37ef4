#ifndef WFSMC_KERNELS_RWM_HPP
#define WFSMC_KERNELS_RWM_HPP

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wfsmc/rng.hpp"

namespace wfsmc {

/// Gaussian random-walk proposal parameters fitted to a particle population.
/// cholesky_factor is the lower Cholesky factor of scale * covariance, so
/// proposals are state + cholesky_factor * z with z ~ N(0, I).
struct GaussianProposalCalibration {
  Eigen::MatrixXd covariance;       // weighted empirical covariance (jitter included)
  double scale = 0.0;               // tau, defaults to 2.38^2 / d
  Eigen::MatrixXd cholesky_factor;  // lower triangular, chol * chol^T == scale * covariance
};

/// Fit a random-walk proposal to weighted d-dimensional states.
///
/// The covariance is the weighted population covariance plus a 1e-10 jitter
/// on the diagonal (indicator-potential problems can collapse coordinates);
/// tau falls back to the optimal-scaling constant 2.38^2/d when no override
/// is given. Throws SingularCovarianceError if the factorization fails even
/// after jittering.
GaussianProposalCalibration calibrate_rwm(std::span<const Eigen::VectorXd> states,
                                          std::span<const double> normalized_weights,
                                          std::optional<double> scale_override = std::nullopt);

/// Draw a proposal from the calibration: state + chol * z.
Eigen::VectorXd rwm_propose(const Eigen::VectorXd& state,
                            const GaussianProposalCalibration& calibration, RngStream& rng);

/// Metropolis accept/reject on log densities; -inf proposals always reject.
bool mh_accept(double log_target_proposal, double log_target_current, RngStream& rng);

/// One random-walk Metropolis step targeting exp(log_target). The state and
/// its cached log-target are updated in place on acceptance.
bool rwm_step(Eigen::VectorXd& state, double& state_log_target,
              const GaussianProposalCalibration& calibration,
              const std::function<double(const Eigen::VectorXd&)>& log_target, RngStream& rng);

/// Convenience overload that evaluates the current log-target itself.
bool rwm_step(Eigen::VectorXd& state, const GaussianProposalCalibration& calibration,
              const std::function<double(const Eigen::VectorXd&)>& log_target, RngStream& rng);

}  // namespace wfsmc

#endif
