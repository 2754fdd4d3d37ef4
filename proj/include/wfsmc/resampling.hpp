#ifndef WFSMC_RESAMPLING_HPP
#define WFSMC_RESAMPLING_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "wfsmc/rng.hpp"

namespace wfsmc {

/// Multinomial resampling: draw `count` IID ancestor indices with
/// P(index = n) = weights[n].
///
/// Implemented with the exponential-spacings trick: `count` sorted uniforms
/// are produced in O(count) and matched against the weight CDF in a single
/// sweep, so the total cost is O(N + count). The returned indices come out
/// sorted as a side effect; callers must not rely on their order beyond that.
std::vector<std::size_t> multinomial_resample(std::span<const double> weights,
                                              std::size_t count, RngStream& rng);

}  // namespace wfsmc

#endif
