#include "wfsmc/variance.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>

namespace wfsmc {
namespace {

double grand_mean(std::span<const double> values) {
  double s = 0.0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

// gamma_q for row-major values with known grand mean.
double autocov_lag(std::span<const double> values, std::size_t m_chains, std::size_t p_len,
                   double mu, std::size_t q) {
  double s = 0.0;
  for (std::size_t m = 0; m < m_chains; ++m) {
    const double* row = values.data() + m * p_len;
    for (std::size_t p = 0; p + q < p_len; ++p) {
      s += (row[p] - mu) * (row[p + q] - mu);
    }
  }
  return s / static_cast<double>(m_chains * p_len);
}

// Geyer IMS over lazily computed autocovariances; identical in value to
// geyer_ims(grand_mean_autocov_values(..., max_lag = P-1)).
double geyer_ims_lazy(std::span<const double> values, std::size_t m_chains, std::size_t p_len,
                      double mu) {
  const double gamma0 = autocov_lag(values, m_chains, p_len, mu, 0);
  double sum = -gamma0;
  double running_min = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0;; ++j) {
    const std::size_t q0 = 2 * j, q1 = 2 * j + 1;
    if (q0 >= p_len) break;
    const double g0 = autocov_lag(values, m_chains, p_len, mu, q0);
    const double g1 = q1 < p_len ? autocov_lag(values, m_chains, p_len, mu, q1) : 0.0;
    double pair = g0 + g1;
    if (pair <= 0.0) break;
    pair = std::min(pair, running_min);
    running_min = pair;
    sum += 2.0 * pair;
  }
  return std::max(sum, 0.0);
}

}  // namespace

AutocovSequence grand_mean_autocov_values(std::span<const double> values,
                                          std::size_t num_chains, std::size_t chain_len,
                                          std::size_t max_lag) {
  assert(values.size() == num_chains * chain_len);
  assert(max_lag < chain_len);
  AutocovSequence out;
  out.num_chains = num_chains;
  out.chain_len = chain_len;
  out.grand_mean = grand_mean(values);
  out.gammas.resize(max_lag + 1);
  for (std::size_t q = 0; q <= max_lag; ++q) {
    out.gammas[q] = autocov_lag(values, num_chains, chain_len, out.grand_mean, q);
  }
  return out;
}

double geyer_ims(const AutocovSequence& autocov) {
  const auto& g = autocov.gammas;
  assert(!g.empty());
  double sum = -g[0];
  double running_min = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; 2 * j < g.size(); ++j) {
    const std::size_t q0 = 2 * j, q1 = 2 * j + 1;
    double pair = g[q0] + (q1 < g.size() ? g[q1] : 0.0);
    if (pair <= 0.0) break;
    pair = std::min(pair, running_min);
    running_min = pair;
    sum += 2.0 * pair;
  }
  return std::max(sum, 0.0);
}

SpectralEstimate tukey_hanning(const AutocovSequence& autocov,
                               std::optional<std::size_t> bandwidth) {
  const auto& g = autocov.gammas;
  assert(!g.empty());
  std::size_t b = bandwidth.value_or(
      static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(autocov.chain_len)))));
  b = std::min(b, g.size() - 1);
  double v = g[0];
  for (std::size_t q = 1; q <= b; ++q) {
    const double x = static_cast<double>(q) / static_cast<double>(b);
    const double w = 0.5 * (1.0 + std::cos(std::numbers::pi * x));
    v += 2.0 * w * g[q];
  }
  SpectralEstimate out;
  out.floored = v < 0.0;
  out.value = std::max(v, 0.0);
  return out;
}

SpectralEstimate mchain_variance_values(std::span<const double> values,
                                        std::size_t num_chains, std::size_t chain_len,
                                        PsiEstimator estimator) {
  assert(chain_len >= 2);
  assert(values.size() == num_chains * chain_len);
  if (estimator == PsiEstimator::kGeyer) {
    const double mu = grand_mean(values);
    return {geyer_ims_lazy(values, num_chains, chain_len, mu), false};
  }
  const std::size_t b = static_cast<std::size_t>(
      std::floor(std::sqrt(static_cast<double>(chain_len))));
  const std::size_t max_lag = std::min(b, chain_len - 1);
  const AutocovSequence ac = grand_mean_autocov_values(values, num_chains, chain_len, max_lag);
  return tukey_hanning(ac, b);
}

SpectralEstimate reweighted_variance_values(std::span<const double> phi_values,
                                            std::span<const double> normalized_weights,
                                            std::size_t num_chains, std::size_t chain_len,
                                            PsiEstimator estimator) {
  assert(phi_values.size() == normalized_weights.size());
  const std::size_t n = phi_values.size();
  double q_est = 0.0;
  for (std::size_t i = 0; i < n; ++i) q_est += normalized_weights[i] * phi_values[i];
  std::vector<double> substituted(n);
  const double scale = static_cast<double>(n);  // Gbar = G/ell^N = N * W
  for (std::size_t i = 0; i < n; ++i) {
    substituted[i] = scale * normalized_weights[i] * (phi_values[i] - q_est);
  }
  return mchain_variance_values(substituted, num_chains, chain_len, estimator);
}

double log_norm_const_variance(std::span<const double> per_iteration_estimates) {
  double s = 0.0;
  for (double v : per_iteration_estimates) s += v;
  return s;
}

}  // namespace wfsmc
