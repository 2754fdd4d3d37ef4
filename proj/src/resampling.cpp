#include "wfsmc/resampling.hpp"

#include <cassert>

namespace wfsmc {

std::vector<std::size_t> multinomial_resample(std::span<const double> weights,
                                              std::size_t count, RngStream& rng) {
  assert(!weights.empty());
  assert(count >= 1);
  const std::size_t n = weights.size();

  // Partial sums of count+1 Exp(1) spacings give count sorted uniforms after
  // division by the total.
  std::vector<double> pos(count);
  double total = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    total += rng.exponential();
    pos[i] = total;
  }
  total += rng.exponential();

  std::vector<std::size_t> indices(count);
  std::size_t idx = 0;
  double cum = weights[0];
  for (std::size_t i = 0; i < count; ++i) {
    const double u = pos[i] / total;
    while (u > cum && idx + 1 < n) {
      ++idx;
      cum += weights[idx];
    }
    indices[i] = idx;
  }
  return indices;
}

}  // namespace wfsmc
