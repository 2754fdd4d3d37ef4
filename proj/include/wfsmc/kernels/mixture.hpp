#ifndef WFSMC_KERNELS_MIXTURE_HPP
#define WFSMC_KERNELS_MIXTURE_HPP

#include "wfsmc/fk_model.hpp"
#include "wfsmc/rng.hpp"

namespace wfsmc {

/// One step of the refresh-mixture kernel
///   K(x, B) = (1 - p) 1_B(x) + p * Uniform(0, bound)(B),
/// which is exactly Uniform(0, bound)-invariant by construction. Returns
/// whether the refresh branch fired (there is no accept/reject decision).
bool mixture_kernel_step(double& state, double move_prob, double level_set_bound,
                         RngStream& rng);

/// Kernel-spec wrapper; reports {0, 0} accept counts (not applicable).
MarkovKernelSpec<double> make_mixture_kernel(double move_prob, double level_set_bound);

}  // namespace wfsmc

#endif
