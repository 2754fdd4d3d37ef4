#ifndef WFSMC_KERNELS_LATIN_SWAP_HPP
#define WFSMC_KERNELS_LATIN_SWAP_HPP

#include <vector>

#include "wfsmc/fk_model.hpp"
#include "wfsmc/rng.hpp"

namespace wfsmc {

/// A d x d matrix whose rows are permutations of {0, .., d-1}, carrying
/// per-column value counts and the score
///   V(x) = sum_j ( sum_v count_{j,v}^2 - d ),
/// which is 0 exactly when x is a Latin square. Counts and score are kept
/// incrementally by the swap kernel.
struct PermutationSquare {
  int d = 0;
  std::vector<int> cells;       // row-major, cells[i*d + j]
  std::vector<int> col_counts;  // col_counts[j*d + v]
  long score = 0;

  static PermutationSquare from_cells(int d, std::vector<int> cells);
  /// Each row an independent uniform permutation (Fisher-Yates).
  static PermutationSquare random(int d, RngStream& rng);

  int cell(int i, int j) const { return cells[static_cast<std::size_t>(i) * d + j]; }
};

/// Score computed from scratch (the incremental bookkeeping is checked
/// against this in tests).
long latin_score(const PermutationSquare& square);

/// One Metropolis step for the target exp(-lambda * V): pick a row i and two
/// distinct columns j != j', propose swapping x[i,j] and x[i,j'], accept with
/// probability min(1, exp(-lambda * deltaV)). The proposal is symmetric and
/// preserves row permutations.
bool latin_swap_step(PermutationSquare& square, double inv_temperature, RngStream& rng);

MarkovKernelSpec<PermutationSquare> make_latin_swap_kernel(double inv_temperature);

}  // namespace wfsmc

#endif
