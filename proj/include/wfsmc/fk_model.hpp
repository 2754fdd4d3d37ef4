#ifndef WFSMC_FK_MODEL_HPP
#define WFSMC_FK_MODEL_HPP

#include <cstdint>
#include <functional>
#include <span>

#include "wfsmc/rng.hpp"
#include "wfsmc/weighted_sample.hpp"

namespace wfsmc {

/// Proposed/accepted tallies of an MCMC move. Kernels without an
/// accept/reject decision (exact-refresh mixtures, Gibbs sweeps) report
/// {0, 0}; counts are additive so k-fold wrappers and per-chain counters
/// aggregate by plain summation.
struct AcceptCount {
  std::int64_t proposed = 0;
  std::int64_t accepted = 0;

  AcceptCount& operator+=(const AcceptCount& o) {
    proposed += o.proposed;
    accepted += o.accepted;
    return *this;
  }
};

/// An invariant MCMC transition: mutates the state in place, drawing from the
/// given stream, and reports its accept tallies. Immutable once built, so M
/// chains can advance in parallel with independent streams.
template <class State>
struct MarkovKernelSpec {
  std::function<AcceptCount(State&, RngStream&)> step;
};

/// The Feynman-Kac contract consumed by every sampler: initial distribution,
/// per-step log-potentials, a kernel factory, and a termination rule.
///
/// Conventions the samplers rely on:
///  - log_potential(t, x) is deterministic once step t has been prepared.
///  - For the tempered drivers, kernel_factory(t, pop) must return a kernel
///    invariant w.r.t. pi_{t-1}; it is called with the freshly resampled
///    population (uniform weights), which is what calibration should use.
///    For growing-state models driven by run_waste_free_growing, rejuvenation
///    happens after the step-t reweighting, so the factory must return a
///    pi_t-invariant kernel instead.
///  - begin_step(t, states) is called before the potentials of step t are
///    read, with the population they will apply to. Adaptive-tempering models
///    choose their next exponent here; it may be called again for the same t
///    with an enlarged population (adaptive-P doubling), in which case the
///    last call wins. Models without adaptation leave it unset.
///  - extend(t, x, rng) grows the state space at step t (orthant-style
///    problems); unset for fixed-dimension models.
template <class State>
struct FeynmanKacModel {
  std::function<State(RngStream&)> initial_sampler;
  std::function<double(int, const State&)> log_potential;
  std::function<MarkovKernelSpec<State>(int, const WeightedSample<State>&)> kernel_factory;
  std::function<bool(int)> is_terminal;

  std::function<void(int, std::span<const State>)> begin_step;       // optional
  std::function<void(int, State&, RngStream&)> extend;               // optional
  std::function<double(int)> step_label;                             // optional: exponent/level for traces
  std::function<double(int, const State&)> adaptation_statistic;     // optional: phi for ACT estimation
};

}  // namespace wfsmc

#endif
