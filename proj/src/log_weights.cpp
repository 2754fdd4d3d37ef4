#include "wfsmc/log_weights.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "wfsmc/errors.hpp"

namespace wfsmc {

double log_sum_exp(std::span<const double> values) {
  if (values.empty()) throw AllWeightsZeroError("log_sum_exp: empty input");
  const double m = *std::max_element(values.begin(), values.end());
  if (std::isinf(m) && m < 0.0) {
    throw AllWeightsZeroError("log_sum_exp: all entries are -inf (particle extinction)");
  }
  double s = 0.0;
  for (double v : values) s += std::exp(v - m);
  return m + std::log(s);
}

NormalizedWeights normalize_log_weights(std::span<const double> log_weights) {
  const std::size_t n = log_weights.size();
  if (n == 0) throw AllWeightsZeroError("normalize_log_weights: empty input");
  const double m = *std::max_element(log_weights.begin(), log_weights.end());
  if (std::isinf(m) && m < 0.0) {
    throw AllWeightsZeroError("normalize_log_weights: all log-weights are -inf");
  }
  NormalizedWeights out;
  out.weights.resize(n);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = std::exp(log_weights[i] - m);
    out.weights[i] = w;
    s += w;
  }
  const double inv = 1.0 / s;
  for (double& w : out.weights) w *= inv;
  out.log_mean = m + std::log(s) - std::log(static_cast<double>(n));
  return out;
}

double ess(std::span<const double> normalized_weights) {
  assert(!normalized_weights.empty());
  double s2 = 0.0;
  for (double w : normalized_weights) s2 += w * w;
  return 1.0 / s2;
}

void NormConstAccumulator::add(double log_mean) {
  per_step_.push_back(log_mean);
  log_total_ += log_mean;
}

}  // namespace wfsmc
