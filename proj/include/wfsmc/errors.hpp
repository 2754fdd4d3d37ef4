#ifndef WFSMC_ERRORS_HPP
#define WFSMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wfsmc {

/// Every log-weight in a population is -inf: the particle system died.
struct AllWeightsZeroError : std::runtime_error {
  explicit AllWeightsZeroError(const std::string& what) : std::runtime_error(what) {}
};

/// A sampler exceeded its iteration cap without the model signalling termination.
struct TerminationFailureError : std::runtime_error {
  explicit TerminationFailureError(const std::string& what) : std::runtime_error(what) {}
};

/// Proposal covariance could not be factorised even after jittering.
struct SingularCovarianceError : std::runtime_error {
  explicit SingularCovarianceError(const std::string& what) : std::runtime_error(what) {}
};

/// A Gibbs sweep received a state that violates its constraints (upstream bug).
struct InfeasibleStateError : std::runtime_error {
  explicit InfeasibleStateError(const std::string& what) : std::runtime_error(what) {}
};

/// Covariance matrix handed to a Cholesky factorisation is not positive definite.
struct CholeskyFailureError : std::runtime_error {
  explicit CholeskyFailureError(const std::string& what) : std::runtime_error(what) {}
};

/// Experiment configuration is malformed or inconsistent.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wfsmc

#endif
