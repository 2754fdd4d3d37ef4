#include "wfsmc/kernels/mixture.hpp"

#include <cassert>

namespace wfsmc {

bool mixture_kernel_step(double& state, double move_prob, double level_set_bound,
                         RngStream& rng) {
  assert(move_prob > 0.0 && move_prob <= 1.0);
  assert(state <= level_set_bound);
  if (rng.uniform01() < move_prob) {
    state = level_set_bound * rng.uniform01();
    return true;
  }
  return false;
}

MarkovKernelSpec<double> make_mixture_kernel(double move_prob, double level_set_bound) {
  MarkovKernelSpec<double> spec;
  spec.step = [move_prob, level_set_bound](double& state, RngStream& rng) {
    mixture_kernel_step(state, move_prob, level_set_bound, rng);
    return AcceptCount{};
  };
  return spec;
}

}  // namespace wfsmc
