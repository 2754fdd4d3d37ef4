#ifndef WFSMC_WEIGHTED_SAMPLE_HPP
#define WFSMC_WEIGHTED_SAMPLE_HPP

#include <span>
#include <utility>
#include <vector>

#include "wfsmc/log_weights.hpp"

namespace wfsmc {

/// A particle population: N states with log-weights, normalized eagerly at
/// construction. Immutable afterwards, so it can be shared across threads.
template <class State>
class WeightedSample {
 public:
  WeightedSample(std::vector<State> states, std::vector<double> log_weights)
      : states_(std::move(states)), log_weights_(std::move(log_weights)) {
    if (states_.size() != log_weights_.size() || states_.empty()) {
      throw AllWeightsZeroError("WeightedSample: states/log_weights size mismatch or empty");
    }
    NormalizedWeights nw = normalize_log_weights(log_weights_);
    weights_ = std::move(nw.weights);
    log_mean_ = nw.log_mean;
  }

  /// Population with uniform weights.
  static WeightedSample uniform(std::vector<State> states) {
    std::vector<double> lw(states.size(), 0.0);
    return WeightedSample(std::move(states), std::move(lw));
  }

  std::size_t size() const { return states_.size(); }
  const std::vector<State>& states() const { return states_; }
  const std::vector<double>& log_weights() const { return log_weights_; }
  const std::vector<double>& weights() const { return weights_; }

  /// log of the mean unnormalized weight (the per-step log ell).
  double log_mean() const { return log_mean_; }

  double ess() const { return wfsmc::ess(weights_); }

 private:
  std::vector<State> states_;
  std::vector<double> log_weights_;
  std::vector<double> weights_;
  double log_mean_;
};

}  // namespace wfsmc

#endif
