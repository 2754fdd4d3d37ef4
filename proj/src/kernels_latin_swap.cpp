#include "wfsmc/kernels/latin_swap.hpp"

#include <cassert>
#include <cmath>
#include <numeric>

namespace wfsmc {
namespace {

void rebuild_counts(PermutationSquare& sq) {
  const int d = sq.d;
  sq.col_counts.assign(static_cast<std::size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      ++sq.col_counts[static_cast<std::size_t>(j) * d + sq.cell(i, j)];
    }
  }
  sq.score = latin_score(sq);
}

}  // namespace

PermutationSquare PermutationSquare::from_cells(int d, std::vector<int> cells) {
  assert(static_cast<int>(cells.size()) == d * d);
  PermutationSquare sq;
  sq.d = d;
  sq.cells = std::move(cells);
#ifndef NDEBUG
  for (int i = 0; i < d; ++i) {
    std::vector<bool> seen(d, false);
    for (int j = 0; j < d; ++j) {
      const int v = sq.cell(i, j);
      assert(v >= 0 && v < d && !seen[v]);
      seen[v] = true;
    }
  }
#endif
  rebuild_counts(sq);
  return sq;
}

PermutationSquare PermutationSquare::random(int d, RngStream& rng) {
  PermutationSquare sq;
  sq.d = d;
  sq.cells.resize(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    int* row = sq.cells.data() + static_cast<std::size_t>(i) * d;
    std::iota(row, row + d, 0);
    for (int j = d - 1; j > 0; --j) {
      const int r = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(j) + 1));
      std::swap(row[j], row[r]);
    }
  }
  rebuild_counts(sq);
  return sq;
}

long latin_score(const PermutationSquare& square) {
  const int d = square.d;
  long v = 0;
  for (int j = 0; j < d; ++j) {
    std::vector<int> counts(d, 0);
    for (int i = 0; i < d; ++i) ++counts[square.cell(i, j)];
    long col = 0;
    for (int c : counts) col += static_cast<long>(c) * c;
    v += col - d;
  }
  return v;
}

bool latin_swap_step(PermutationSquare& square, double inv_temperature, RngStream& rng) {
  const int d = square.d;
  const int i = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(d)));
  const int j = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(d)));
  int jp = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(d) - 1));
  if (jp >= j) ++jp;  // uniform over columns distinct from j

  int* cells = square.cells.data() + static_cast<std::size_t>(i) * d;
  const int v = cells[j];
  const int w = cells[jp];
  int* cj = square.col_counts.data() + static_cast<std::size_t>(j) * d;
  int* cjp = square.col_counts.data() + static_cast<std::size_t>(jp) * d;

  // Column j loses one v and gains one w; column j' the reverse.
  const long delta = 2L * (cj[w] - cj[v] + cjp[v] - cjp[w]) + 4L;

  bool accept = true;
  if (delta > 0) {
    accept = std::log(rng.uniform01_open_zero()) < -inv_temperature * static_cast<double>(delta);
  }
  if (accept) {
    --cj[v];
    ++cj[w];
    --cjp[w];
    ++cjp[v];
    cells[j] = w;
    cells[jp] = v;
    square.score += delta;
  }
  return accept;
}

MarkovKernelSpec<PermutationSquare> make_latin_swap_kernel(double inv_temperature) {
  MarkovKernelSpec<PermutationSquare> spec;
  spec.step = [inv_temperature](PermutationSquare& sq, RngStream& rng) {
    AcceptCount c;
    c.proposed = 1;
    c.accepted = latin_swap_step(sq, inv_temperature, rng) ? 1 : 0;
    return c;
  };
  return spec;
}

}  // namespace wfsmc
