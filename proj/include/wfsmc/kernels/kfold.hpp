#ifndef WFSMC_KERNELS_KFOLD_HPP
#define WFSMC_KERNELS_KFOLD_HPP

#include <cassert>

#include "wfsmc/fk_model.hpp"

namespace wfsmc {

/// k-fold composition of an invariant kernel: applies the wrapped step k
/// times under the same stream and aggregates accept tallies over the folds.
/// k = 1 is behaviorally identical to the wrapped kernel.
template <class State>
MarkovKernelSpec<State> kfold_wrap(MarkovKernelSpec<State> kernel, int k) {
  assert(k >= 1);
  if (k == 1) return kernel;
  MarkovKernelSpec<State> out;
  out.step = [kernel = std::move(kernel), k](State& state, RngStream& rng) {
    AcceptCount total;
    for (int i = 0; i < k; ++i) total += kernel.step(state, rng);
    return total;
  };
  return out;
}

}  // namespace wfsmc

#endif
