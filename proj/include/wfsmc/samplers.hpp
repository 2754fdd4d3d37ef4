#ifndef WFSMC_SAMPLERS_HPP
#define WFSMC_SAMPLERS_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfsmc/adaptation.hpp"
#include "wfsmc/chain_array.hpp"
#include "wfsmc/errors.hpp"
#include "wfsmc/fk_model.hpp"
#include "wfsmc/kernels/kfold.hpp"
#include "wfsmc/log_weights.hpp"
#include "wfsmc/parallel.hpp"
#include "wfsmc/resampling.hpp"
#include "wfsmc/run_trace.hpp"
#include "wfsmc/variance.hpp"
#include "wfsmc/weighted_sample.hpp"

namespace wfsmc {

/// A named scalar function of the state, reported per iteration and at the
/// end of a run.
template <class State>
struct Estimand {
  std::string name;
  std::function<double(const State&)> fn;
};

struct SamplerOptions {
  int max_iterations = 10000;  // cap on adaptive-tempering runaways
  unsigned threads = 1;        // within-run chain/particle parallelism
  PsiEstimator variance_estimator = PsiEstimator::kGeyer;
};

namespace detail {

// RNG stream path tags; every draw site is keyed by (seed, tag, t, lane) so
// the thread schedule cannot change the output.
inline constexpr std::uint64_t kInitTag = 0;
inline constexpr std::uint64_t kResampleTag = 1;
inline constexpr std::uint64_t kChainTag = 2;
inline constexpr std::uint64_t kExtendTag = 3;

inline double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

inline double accept_rate(const AcceptCount& c) {
  return c.proposed > 0 ? static_cast<double>(c.accepted) / static_cast<double>(c.proposed)
                        : nan_value();
}

class WallClock {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <class State>
std::vector<State> draw_initial(const FeynmanKacModel<State>& model, std::size_t n,
                                const RngStream& root, unsigned threads) {
  std::vector<State> states(n);
  const RngStream init_root = root.child(kInitTag);
  parallel_for(n, threads, [&](std::size_t i) {
    RngStream g = init_root.child(i);
    states[i] = model.initial_sampler(g);
  });
  return states;
}

template <class State>
std::vector<double> eval_log_potentials(const FeynmanKacModel<State>& model, int t,
                                        const std::vector<State>& states, unsigned threads) {
  std::vector<double> lw(states.size());
  parallel_for(states.size(), threads, [&](std::size_t i) {
    lw[i] = model.log_potential(t, states[i]);
  });
  return lw;
}

template <class State>
double step_label(const FeynmanKacModel<State>& model, int t) {
  return model.step_label ? model.step_label(t) : static_cast<double>(t);
}

template <class State>
void finalize_estimands(RunTrace& trace, const std::vector<State>& states,
                        std::span<const double> weights,
                        const std::vector<Estimand<State>>& estimands) {
  for (const auto& e : estimands) {
    double q = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) q += weights[i] * e.fn(states[i]);
    trace.estimands[e.name] = q;
  }
}

// Empirical variance with 1/n normalization (the lag-0 grand-mean autocov).
inline double population_variance(std::span<const double> values) {
  double mu = 0.0;
  for (double v : values) mu += v;
  mu /= static_cast<double>(values.size());
  double s = 0.0;
  for (double v : values) s += (v - mu) * (v - mu);
  return s / static_cast<double>(values.size());
}

// Values of Gbar_t = G_t / ell_t^N = N * W over the flattened population.
inline std::vector<double> gbar_values(std::span<const double> normalized_weights) {
  std::vector<double> g(normalized_weights.size());
  const double n = static_cast<double>(normalized_weights.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = n * normalized_weights[i];
  return g;
}

}  // namespace detail

/// Standard SMC sampler: at each iteration, resample N ancestors from the
/// previous weights, move each through the k-fold kernel M_t^k, and reweight
/// by G_t. Estimates of the normalizing constant accumulate the per-step
/// mean-weight factors. The single-run variance estimators do not apply to
/// this layout, so the corresponding trace fields hold NaN.
template <class State>
RunTrace run_standard_smc(const FeynmanKacModel<State>& model, std::size_t n_particles, int k,
                          std::uint64_t seed, const std::vector<Estimand<State>>& estimands,
                          const SamplerOptions& opts = {}) {
  if (n_particles < 2) throw std::invalid_argument("run_standard_smc: N must be >= 2");
  if (k < 1) throw std::invalid_argument("run_standard_smc: k must be >= 1");
  const detail::WallClock clock;
  const double nan = detail::nan_value();
  RunTrace trace;
  RngStream root(seed);

  std::vector<State> states = detail::draw_initial(model, n_particles, root, opts.threads);
  if (model.begin_step) model.begin_step(0, states);
  std::vector<double> lw = detail::eval_log_potentials(model, 0, states, opts.threads);
  trace.total_potential_evals += static_cast<std::int64_t>(n_particles);
  NormalizedWeights nw = normalize_log_weights(lw);
  NormConstAccumulator acc;
  acc.add(nw.log_mean);
  trace.iterations.push_back({0, detail::step_label(model, 0), ess(nw.weights), nw.log_mean,
                              acc.log_total(), 1, nan, nan, nan, nan, 0});

  int t = 0;
  while (!model.is_terminal(t)) {
    ++t;
    if (t > opts.max_iterations) {
      throw TerminationFailureError("run_standard_smc: iteration cap " +
                                    std::to_string(opts.max_iterations) + " reached");
    }
    RngStream rs = root.child(detail::kResampleTag, static_cast<std::uint64_t>(t));
    const std::vector<std::size_t> ancestors = multinomial_resample(nw.weights, n_particles, rs);
    std::vector<State> resampled;
    resampled.reserve(n_particles);
    for (std::size_t a : ancestors) resampled.push_back(states[a]);
    states = std::move(resampled);

    const MarkovKernelSpec<State> kernel =
        kfold_wrap(model.kernel_factory(t, WeightedSample<State>::uniform(states)), k);
    std::vector<AcceptCount> counts(n_particles);
    const RngStream iter_root = root.child(detail::kChainTag, static_cast<std::uint64_t>(t));
    parallel_for(n_particles, opts.threads, [&](std::size_t i) {
      RngStream g = iter_root.child(i);
      counts[i] = kernel.step(states[i], g);
    });

    if (model.begin_step) model.begin_step(t, states);
    lw = detail::eval_log_potentials(model, t, states, opts.threads);
    trace.total_potential_evals += static_cast<std::int64_t>(n_particles);
    nw = normalize_log_weights(lw);
    acc.add(nw.log_mean);

    AcceptCount total;
    for (const auto& c : counts) total += c;
    const std::int64_t steps = static_cast<std::int64_t>(n_particles) * k;
    trace.total_kernel_steps += steps;
    trace.iterations.push_back({t, detail::step_label(model, t), ess(nw.weights), nw.log_mean,
                                acc.log_total(), 1, detail::accept_rate(total), nan, nan, nan,
                                steps});
  }

  trace.final_log_l = acc.log_total();
  detail::finalize_estimands(trace, states, nw.weights, estimands);
  for (const auto& e : estimands) trace.variances[e.name] = nan;
  trace.var_log_l = nan;
  trace.wall_ms = clock.elapsed_ms();
  return trace;
}

/// Waste-free SMC sampler with N = M * P: resample only M ancestors from all
/// N weights, extend each into a chain of length P through the (k = 1)
/// kernel, flatten the M x P array row-major, and reweight all N particles
/// by G_t -- the chain start is re-scored under the new potential like every
/// other particle. Per-iteration M-chain variance estimates and the
/// Theorem-2 accumulation for Var(log L) are recorded as the run goes.
template <class State>
RunTrace run_waste_free_smc(const FeynmanKacModel<State>& model, std::size_t m_chains,
                            std::size_t p_len, std::uint64_t seed,
                            const std::vector<Estimand<State>>& estimands,
                            const SamplerOptions& opts = {}) {
  if (m_chains < 1) throw std::invalid_argument("run_waste_free_smc: M must be >= 1");
  if (p_len < 2) {
    throw std::invalid_argument("run_waste_free_smc: P must be >= 2 (P = 1 is pure resampling)");
  }
  const detail::WallClock clock;
  const double nan = detail::nan_value();
  const std::size_t n = m_chains * p_len;
  RunTrace trace;
  RngStream root(seed);

  std::vector<State> states = detail::draw_initial(model, n, root, opts.threads);
  if (model.begin_step) model.begin_step(0, states);
  std::vector<double> lw = detail::eval_log_potentials(model, 0, states, opts.threads);
  trace.total_potential_evals += static_cast<std::int64_t>(n);
  NormalizedWeights nw = normalize_log_weights(lw);
  NormConstAccumulator acc;
  acc.add(nw.log_mean);

  // Theorem-2 accumulation: the t = 0 term is the IID variance of Gbar_0.
  std::vector<double> per_step_vinf;
  per_step_vinf.push_back(detail::population_variance(detail::gbar_values(nw.weights)));
  double var_log_l = per_step_vinf.back() / static_cast<double>(n);
  trace.iterations.push_back({0, detail::step_label(model, 0), ess(nw.weights), nw.log_mean,
                              acc.log_total(), static_cast<int>(p_len), nan, nan, nan, var_log_l,
                              0});

  ChainArray<State> chains(0, 0);
  bool have_chains = false;
  int t = 0;
  while (!model.is_terminal(t)) {
    ++t;
    if (t > opts.max_iterations) {
      throw TerminationFailureError("run_waste_free_smc: iteration cap " +
                                    std::to_string(opts.max_iterations) + " reached");
    }
    RngStream rs = root.child(detail::kResampleTag, static_cast<std::uint64_t>(t));
    const std::vector<std::size_t> ancestors = multinomial_resample(nw.weights, m_chains, rs);
    std::vector<State> seeds;
    seeds.reserve(m_chains);
    for (std::size_t a : ancestors) seeds.push_back(states[a]);

    const MarkovKernelSpec<State> kernel =
        model.kernel_factory(t, WeightedSample<State>::uniform(seeds));
    chains = ChainArray<State>(m_chains, p_len);
    std::vector<AcceptCount> counts(m_chains);
    const RngStream iter_root = root.child(detail::kChainTag, static_cast<std::uint64_t>(t));
    parallel_for(m_chains, opts.threads, [&](std::size_t m) {
      RngStream g = iter_root.child(m);
      auto& row = chains.row(m);
      row[0] = std::move(seeds[m]);
      AcceptCount c;
      for (std::size_t p = 1; p < p_len; ++p) {
        row[p] = row[p - 1];
        c += kernel.step(row[p], g);
      }
      counts[m] = c;
    });
    have_chains = true;

    states = chains.flatten();
    if (model.begin_step) model.begin_step(t, states);
    lw = detail::eval_log_potentials(model, t, states, opts.threads);
    trace.total_potential_evals += static_cast<std::int64_t>(n);
    nw = normalize_log_weights(lw);
    acc.add(nw.log_mean);

    per_step_vinf.push_back(
        mchain_variance_values(detail::gbar_values(nw.weights), m_chains, p_len,
                               opts.variance_estimator)
            .value);
    var_log_l += per_step_vinf.back() / static_cast<double>(n);

    double var_tilde = nan, var_hat = nan;
    if (!estimands.empty()) {
      const std::vector<double> phi_vals = chains.values(estimands.front().fn);
      var_tilde =
          mchain_variance_values(phi_vals, m_chains, p_len, opts.variance_estimator).value;
      var_hat = reweighted_variance_values(phi_vals, nw.weights, m_chains, p_len,
                                           opts.variance_estimator)
                    .value;
    }

    AcceptCount total;
    for (const auto& c : counts) total += c;
    const std::int64_t steps = static_cast<std::int64_t>(m_chains) * (p_len - 1);
    trace.total_kernel_steps += steps;
    trace.iterations.push_back({t, detail::step_label(model, t), ess(nw.weights), nw.log_mean,
                                acc.log_total(), static_cast<int>(p_len),
                                detail::accept_rate(total), var_tilde, var_hat, var_log_l,
                                steps});
  }

  trace.final_log_l = acc.log_total();
  detail::finalize_estimands(trace, states, nw.weights, estimands);
  for (const auto& e : estimands) {
    if (have_chains) {
      const std::vector<double> vals = chains.values(e.fn);
      trace.variances[e.name] =
          reweighted_variance_values(vals, nw.weights, m_chains, p_len, opts.variance_estimator)
              .value;
    } else {
      trace.variances[e.name] = nan;
    }
  }
  // For fixed P the per-term division by N matches summing first.
  trace.var_log_l = log_norm_const_variance(per_step_vinf) / static_cast<double>(n);
  trace.wall_ms = clock.elapsed_ms();
  return trace;
}

/// ESS-triggered waste-free variant for growing state spaces: every step
/// extends all N particles and multiplies the accumulated weights by G_t;
/// when the ESS of the accumulated weights drops below threshold * N, M
/// ancestors are resampled, M chains of length P are run with the
/// pi_t-invariant kernel, and the weights reset to uniform. threshold = 0
/// disables rejuvenation entirely (sequential importance sampling).
template <class State>
RunTrace run_waste_free_growing(const FeynmanKacModel<State>& model, std::size_t m_chains,
                                std::size_t p_len, double ess_threshold_fraction,
                                std::uint64_t seed,
                                const std::vector<Estimand<State>>& estimands,
                                const SamplerOptions& opts = {}) {
  if (!model.extend) {
    throw std::invalid_argument("run_waste_free_growing: model lacks an extend action");
  }
  if (m_chains < 1 || p_len < 2) {
    throw std::invalid_argument("run_waste_free_growing: require M >= 1, P >= 2");
  }
  if (ess_threshold_fraction < 0.0 || ess_threshold_fraction >= 1.0) {
    throw std::invalid_argument("run_waste_free_growing: threshold must lie in [0, 1)");
  }
  const detail::WallClock clock;
  const double nan = detail::nan_value();
  const std::size_t n = m_chains * p_len;
  RunTrace trace;
  RngStream root(seed);

  std::vector<State> states = detail::draw_initial(model, n, root, opts.threads);
  std::vector<double> logw(n, 0.0);
  double committed = 0.0;   // log L contributions locked in at resets
  double prev_log_l = 0.0;  // previous iteration's total estimate

  for (int t = 0;; ++t) {
    if (t > opts.max_iterations) {
      throw TerminationFailureError("run_waste_free_growing: iteration cap reached");
    }
    const RngStream ext_root = root.child(detail::kExtendTag, static_cast<std::uint64_t>(t));
    parallel_for(n, opts.threads, [&](std::size_t i) {
      RngStream g = ext_root.child(i);
      model.extend(t, states[i], g);
    });
    if (model.begin_step) model.begin_step(t, states);
    parallel_for(n, opts.threads, [&](std::size_t i) {
      logw[i] += model.log_potential(t, states[i]);
    });
    trace.total_potential_evals += static_cast<std::int64_t>(n);

    NormalizedWeights nw = normalize_log_weights(logw);
    const double log_l_total = committed + nw.log_mean;
    const double log_ell = log_l_total - prev_log_l;
    prev_log_l = log_l_total;
    const double e = ess(nw.weights);

    bool rejuvenated = false;
    double rate = nan;
    std::int64_t steps = 0;
    if (e < ess_threshold_fraction * static_cast<double>(n)) {
      RngStream rs = root.child(detail::kResampleTag, static_cast<std::uint64_t>(t));
      const std::vector<std::size_t> ancestors = multinomial_resample(nw.weights, m_chains, rs);
      std::vector<State> seeds;
      seeds.reserve(m_chains);
      for (std::size_t a : ancestors) seeds.push_back(states[a]);
      const MarkovKernelSpec<State> kernel =
          model.kernel_factory(t, WeightedSample<State>::uniform(seeds));
      ChainArray<State> chains(m_chains, p_len);
      std::vector<AcceptCount> counts(m_chains);
      const RngStream iter_root = root.child(detail::kChainTag, static_cast<std::uint64_t>(t));
      parallel_for(m_chains, opts.threads, [&](std::size_t m) {
        RngStream g = iter_root.child(m);
        auto& row = chains.row(m);
        row[0] = std::move(seeds[m]);
        AcceptCount c;
        for (std::size_t p = 1; p < p_len; ++p) {
          row[p] = row[p - 1];
          c += kernel.step(row[p], g);
        }
        counts[m] = c;
      });
      states = chains.flatten();
      committed += nw.log_mean;
      logw.assign(n, 0.0);
      AcceptCount total;
      for (const auto& c : counts) total += c;
      rate = detail::accept_rate(total);
      steps = static_cast<std::int64_t>(m_chains) * (p_len - 1);
      trace.total_kernel_steps += steps;
      rejuvenated = true;
    }

    trace.iterations.push_back({t, detail::step_label(model, t), e, log_ell, log_l_total,
                                rejuvenated ? static_cast<int>(p_len) : 1, rate, nan, nan, nan,
                                steps});
    if (model.is_terminal(t)) break;
  }

  const NormalizedWeights final_w = normalize_log_weights(logw);
  trace.final_log_l = prev_log_l;
  detail::finalize_estimands(trace, states, final_w.weights, estimands);
  for (const auto& e : estimands) trace.variances[e.name] = nan;
  trace.var_log_l = nan;
  trace.wall_ms = clock.elapsed_ms();
  return trace;
}

/// Waste-free SMC with the on-line chain-length controller: at each
/// iteration the M chains are first run to the carried-over P_t; the
/// autocorrelation time of the adaptation statistic (log G_t by default) is
/// then estimated from the chains, and P_t doubles in place until it reaches
/// kappa times that estimate or max_p. Exceeding max_p leaves a warning in
/// the trace rather than failing the run.
template <class State>
RunTrace run_waste_free_adaptive_p(const FeynmanKacModel<State>& model, std::size_t m_chains,
                                   double kappa, std::size_t initial_p, std::size_t max_p,
                                   std::uint64_t seed,
                                   const std::vector<Estimand<State>>& estimands,
                                   const SamplerOptions& opts = {}) {
  if (m_chains < 1) throw std::invalid_argument("run_waste_free_adaptive_p: M must be >= 1");
  if (initial_p < 2 || max_p < initial_p) {
    throw std::invalid_argument("run_waste_free_adaptive_p: require 2 <= initial_P <= max_P");
  }
  if (kappa < 1.0) throw std::invalid_argument("run_waste_free_adaptive_p: kappa must be >= 1");
  const detail::WallClock clock;
  const double nan = detail::nan_value();
  RunTrace trace;
  if (kappa < 2.0) {
    trace.warnings.push_back(
        "kappa < 2: the autocorrelation time cannot be resolved from chains shorter than it");
  }
  RngStream root(seed);

  std::size_t p_cur = initial_p;
  std::size_t n = m_chains * p_cur;
  std::vector<State> states = detail::draw_initial(model, n, root, opts.threads);
  if (model.begin_step) model.begin_step(0, states);
  std::vector<double> lw = detail::eval_log_potentials(model, 0, states, opts.threads);
  trace.total_potential_evals += static_cast<std::int64_t>(n);
  NormalizedWeights nw = normalize_log_weights(lw);
  NormConstAccumulator acc;
  acc.add(nw.log_mean);
  double var_log_l = detail::population_variance(detail::gbar_values(nw.weights)) /
                     static_cast<double>(n);
  trace.iterations.push_back({0, detail::step_label(model, 0), ess(nw.weights), nw.log_mean,
                              acc.log_total(), static_cast<int>(p_cur), nan, nan, nan, var_log_l,
                              0});

  ChainArray<State> chains(0, 0);
  bool have_chains = false;
  int t = 0;
  while (!model.is_terminal(t)) {
    ++t;
    if (t > opts.max_iterations) {
      throw TerminationFailureError("run_waste_free_adaptive_p: iteration cap reached");
    }
    RngStream rs = root.child(detail::kResampleTag, static_cast<std::uint64_t>(t));
    const std::vector<std::size_t> ancestors = multinomial_resample(nw.weights, m_chains, rs);
    std::vector<State> seeds;
    seeds.reserve(m_chains);
    for (std::size_t a : ancestors) seeds.push_back(states[a]);

    const MarkovKernelSpec<State> kernel =
        model.kernel_factory(t, WeightedSample<State>::uniform(seeds));
    chains = ChainArray<State>(m_chains, p_cur);
    std::vector<AcceptCount> counts(m_chains);
    const RngStream iter_root = root.child(detail::kChainTag, static_cast<std::uint64_t>(t));
    std::vector<RngStream> chain_streams;
    chain_streams.reserve(m_chains);
    for (std::size_t m = 0; m < m_chains; ++m) chain_streams.push_back(iter_root.child(m));
    parallel_for(m_chains, opts.threads, [&](std::size_t m) {
      auto& row = chains.row(m);
      row[0] = std::move(seeds[m]);
      AcceptCount c;
      for (std::size_t p = 1; p < p_cur; ++p) {
        row[p] = row[p - 1];
        c += kernel.step(row[p], chain_streams[m]);
      }
      counts[m] = c;
    });
    have_chains = true;

    // Doubling loop: estimate the ACT of the adaptation statistic from the
    // current chains, grow in place until P_t >= kappa * ACT.
    for (;;) {
      states = chains.flatten();
      if (model.begin_step) model.begin_step(t, states);
      std::vector<double> act_vals(states.size());
      if (model.adaptation_statistic) {
        for (std::size_t i = 0; i < states.size(); ++i) {
          act_vals[i] = model.adaptation_statistic(t, states[i]);
        }
      } else {
        for (std::size_t i = 0; i < states.size(); ++i) {
          act_vals[i] = model.log_potential(t, states[i]);
        }
      }
      const double gamma0 =
          grand_mean_autocov_values(act_vals, m_chains, p_cur, 0).gammas[0];
      double act = 0.5;
      if (gamma0 > 0.0) {
        const double vinf =
            mchain_variance_values(act_vals, m_chains, p_cur, opts.variance_estimator).value;
        act = std::max(vinf / (2.0 * gamma0), 0.5);
      }
      if (static_cast<double>(p_cur) >= kappa * act) break;
      if (p_cur >= max_p) {
        trace.warnings.push_back("MaxPExceeded at t=" + std::to_string(t) + ": P=" +
                                 std::to_string(p_cur) + " < kappa*ACT=" +
                                 std::to_string(kappa * act));
        break;
      }
      const std::size_t p_new = std::min(2 * p_cur, max_p);
      parallel_for(m_chains, opts.threads, [&](std::size_t m) {
        auto& row = chains.row(m);
        row.resize(p_new);
        AcceptCount c;
        for (std::size_t p = p_cur; p < p_new; ++p) {
          row[p] = row[p - 1];
          c += kernel.step(row[p], chain_streams[m]);
        }
        counts[m] += c;
      });
      p_cur = p_new;
    }

    n = m_chains * p_cur;
    lw = detail::eval_log_potentials(model, t, states, opts.threads);
    trace.total_potential_evals += static_cast<std::int64_t>(n);
    nw = normalize_log_weights(lw);
    acc.add(nw.log_mean);

    const double vinf_gbar =
        mchain_variance_values(detail::gbar_values(nw.weights), m_chains, p_cur,
                               opts.variance_estimator)
            .value;
    var_log_l += vinf_gbar / static_cast<double>(n);

    double var_tilde = nan, var_hat = nan;
    if (!estimands.empty()) {
      const std::vector<double> phi_vals = chains.values(estimands.front().fn);
      var_tilde =
          mchain_variance_values(phi_vals, m_chains, p_cur, opts.variance_estimator).value;
      var_hat = reweighted_variance_values(phi_vals, nw.weights, m_chains, p_cur,
                                           opts.variance_estimator)
                    .value;
    }

    AcceptCount total;
    for (const auto& c : counts) total += c;
    const std::int64_t steps = static_cast<std::int64_t>(m_chains) * (p_cur - 1);
    trace.total_kernel_steps += steps;
    trace.iterations.push_back({t, detail::step_label(model, t), ess(nw.weights), nw.log_mean,
                                acc.log_total(), static_cast<int>(p_cur),
                                detail::accept_rate(total), var_tilde, var_hat, var_log_l,
                                steps});
  }

  trace.final_log_l = acc.log_total();
  detail::finalize_estimands(trace, states, nw.weights, estimands);
  for (const auto& e : estimands) {
    if (have_chains) {
      const std::vector<double> vals = chains.values(e.fn);
      trace.variances[e.name] =
          reweighted_variance_values(vals, nw.weights, m_chains, p_cur, opts.variance_estimator)
              .value;
    } else {
      trace.variances[e.name] = nan;
    }
  }
  trace.var_log_l = var_log_l;
  trace.wall_ms = clock.elapsed_ms();
  return trace;
}

}  // namespace wfsmc

#endif
