#include "wfsmc/kernels/rwm.hpp"

#include <cassert>
#include <cmath>

#include "wfsmc/errors.hpp"

namespace wfsmc {

GaussianProposalCalibration calibrate_rwm(std::span<const Eigen::VectorXd> states,
                                          std::span<const double> normalized_weights,
                                          std::optional<double> scale_override) {
  assert(!states.empty());
  assert(states.size() == normalized_weights.size());
  const Eigen::Index d = states[0].size();
  assert(d >= 1);

  Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
  for (std::size_t i = 0; i < states.size(); ++i) mean += normalized_weights[i] * states[i];

  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t i = 0; i < states.size(); ++i) {
    const Eigen::VectorXd c = states[i] - mean;
    cov.noalias() += normalized_weights[i] * (c * c.transpose());
  }
  cov.diagonal().array() += 1e-10;

  GaussianProposalCalibration calib;
  calib.covariance = cov;
  calib.scale = scale_override.value_or(2.38 * 2.38 / static_cast<double>(d));

  Eigen::LLT<Eigen::MatrixXd> llt(calib.scale * cov);
  if (llt.info() != Eigen::Success) {
    throw SingularCovarianceError("calibrate_rwm: Cholesky failed after jitter floor");
  }
  calib.cholesky_factor = llt.matrixL();
  return calib;
}

Eigen::VectorXd rwm_propose(const Eigen::VectorXd& state,
                            const GaussianProposalCalibration& calibration, RngStream& rng) {
  Eigen::VectorXd z(state.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = rng.standard_normal();
  return state + calibration.cholesky_factor * z;
}

bool mh_accept(double log_target_proposal, double log_target_current, RngStream& rng) {
  if (std::isinf(log_target_proposal) && log_target_proposal < 0.0) return false;
  const double delta = log_target_proposal - log_target_current;
  if (delta >= 0.0) return true;
  return std::log(rng.uniform01_open_zero()) < delta;
}

bool rwm_step(Eigen::VectorXd& state, double& state_log_target,
              const GaussianProposalCalibration& calibration,
              const std::function<double(const Eigen::VectorXd&)>& log_target, RngStream& rng) {
  Eigen::VectorXd proposal = rwm_propose(state, calibration, rng);
  const double lp = log_target(proposal);
  if (mh_accept(lp, state_log_target, rng)) {
    state = std::move(proposal);
    state_log_target = lp;
    return true;
  }
  return false;
}

bool rwm_step(Eigen::VectorXd& state, const GaussianProposalCalibration& calibration,
              const std::function<double(const Eigen::VectorXd&)>& log_target, RngStream& rng) {
  double lt = log_target(state);
  return rwm_step(state, lt, calibration, log_target, rng);
}

}  // namespace wfsmc
