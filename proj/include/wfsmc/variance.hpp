#ifndef WFSMC_VARIANCE_HPP
#define WFSMC_VARIANCE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wfsmc/chain_array.hpp"

namespace wfsmc {

/// Lag-q grand-mean autocovariances of M chains of length P,
///   gamma_q = (1/MP) sum_m sum_{p=1}^{P-q} (v[m,p] - mu)(v[m,p+q] - mu),
/// with mu the grand mean over all MP values. Note the 1/(MP) normalization
/// regardless of lag; with M = 1 this is the classical biased single-chain
/// autocovariance.
struct AutocovSequence {
  std::vector<double> gammas;
  std::size_t num_chains = 0;
  std::size_t chain_len = 0;
  double grand_mean = 0.0;
};

/// Which single-chain estimator psi_P turns autocovariances into an estimate
/// of the asymptotic variance v_inf.
enum class PsiEstimator { kGeyer, kTukeyHanning };

/// Autocovariances of row-major chain values up to max_lag (< P) inclusive.
AutocovSequence grand_mean_autocov_values(std::span<const double> values,
                                          std::size_t num_chains, std::size_t chain_len,
                                          std::size_t max_lag);

/// Geyer's initial monotone sequence estimator. Adjacent-pair sums
/// Gamma_j = gamma_{2j} + gamma_{2j+1} are truncated at the first
/// non-positive value and forced non-increasing by a running minimum;
/// the result -gamma_0 + 2 sum Gamma_j is clamped at 0.
double geyer_ims(const AutocovSequence& autocov);

/// Tukey-Hanning lag-window estimator: gamma_0 + 2 sum w(q/b) gamma_q with
/// w(x) = (1 + cos(pi x))/2. Bandwidth defaults to floor(sqrt(P)). Negative
/// estimates are floored at 0 with `floored` set.
struct SpectralEstimate {
  double value = 0.0;
  bool floored = false;
};
SpectralEstimate tukey_hanning(const AutocovSequence& autocov,
                               std::optional<std::size_t> bandwidth = std::nullopt);

/// M-chain estimate of v_inf(M_t, phi) from row-major phi values. The Geyer
/// path computes autocovariances lazily and stops at its truncation point, so
/// the cost is O(MP * truncation lag) rather than O(M P^2).
SpectralEstimate mchain_variance_values(std::span<const double> values,
                                        std::size_t num_chains, std::size_t chain_len,
                                        PsiEstimator estimator);

/// Same, with phi replaced by Gbar * (phi - Q^N(phi)) where Gbar = N * W:
/// the substitution that estimates V_t(phi) of the weighted estimate.
SpectralEstimate reweighted_variance_values(std::span<const double> phi_values,
                                            std::span<const double> normalized_weights,
                                            std::size_t num_chains, std::size_t chain_len,
                                            PsiEstimator estimator);

/// Sum of per-iteration v_inf(M_s, Gbar_s) estimates (the Theorem-2
/// accumulation); divide by N for the variance of log L_t^N.
double log_norm_const_variance(std::span<const double> per_iteration_estimates);

/// Convenience wrappers over a ChainArray.
template <class State, class Phi>
AutocovSequence grand_mean_autocov(const ChainArray<State>& chains, Phi&& phi,
                                   std::size_t max_lag) {
  const std::vector<double> vals = chains.values(phi);
  return grand_mean_autocov_values(vals, chains.num_chains(), chains.chain_len(), max_lag);
}

template <class State, class Phi>
double mchain_variance(const ChainArray<State>& chains, Phi&& phi, PsiEstimator estimator) {
  const std::vector<double> vals = chains.values(phi);
  return mchain_variance_values(vals, chains.num_chains(), chains.chain_len(), estimator).value;
}

template <class State, class Phi>
double reweighted_variance(const ChainArray<State>& chains,
                           std::span<const double> normalized_weights, Phi&& phi,
                           PsiEstimator estimator) {
  const std::vector<double> vals = chains.values(phi);
  return reweighted_variance_values(vals, normalized_weights, chains.num_chains(),
                                    chains.chain_len(), estimator)
      .value;
}

}  // namespace wfsmc

#endif
