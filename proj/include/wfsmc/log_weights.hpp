#ifndef WFSMC_LOG_WEIGHTS_HPP
#define WFSMC_LOG_WEIGHTS_HPP

#include <span>
#include <vector>

namespace wfsmc {

struct NormalizedWeights {
  std::vector<double> weights;  // sum to 1, entries in [0, 1]
  double log_mean = 0.0;        // logsumexp(log_weights) - log(n)
};

/// Normalize log-weights into probabilities, -inf entries allowed.
///
/// logsumexp is anchored at the max element; the returned log_mean is the
/// log of the average unnormalized weight, the per-step factor of the
/// normalizing-constant estimate. Throws AllWeightsZeroError when every
/// entry is -inf (total particle extinction) rather than returning -inf,
/// and rejects empty input.
NormalizedWeights normalize_log_weights(std::span<const double> log_weights);

/// logsumexp with the same conventions (throws on all--inf / empty input).
double log_sum_exp(std::span<const double> values);

/// Effective sample size 1/sum(W^2) of already-normalized weights.
/// Lies in [1, n]; equals n exactly when the weights are uniform.
double ess(std::span<const double> normalized_weights);

/// Running log normalizing constant: log L_t = sum of per-step log ell_s.
/// The sum is accumulated in iteration order so runs are bit-reproducible.
class NormConstAccumulator {
 public:
  void add(double log_mean);

  double log_total() const { return log_total_; }
  const std::vector<double>& per_step() const { return per_step_; }

 private:
  double log_total_ = 0.0;
  std::vector<double> per_step_;
};

}  // namespace wfsmc

#endif
