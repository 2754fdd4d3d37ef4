#include "wfsmc/kernels/gibbs_truncated.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "wfsmc/errors.hpp"

namespace wfsmc {

void gibbs_truncated_sweep(std::vector<double>& state, const Eigen::MatrixXd& gamma,
                           const Eigen::VectorXd& a, RngStream& rng) {
  const int t = static_cast<int>(state.size());
  assert(gamma.rows() >= t && gamma.cols() >= t && a.size() >= t);
  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr double kFeasTol = 1e-9;

  // Row residuals r_u = sum_{v<=u} gamma(u,v) x_v, kept incrementally.
  std::vector<double> residual(t, 0.0);
  for (int u = 0; u < t; ++u) {
    double r = 0.0;
    for (int v = 0; v <= u; ++v) r += gamma(u, v) * state[static_cast<std::size_t>(v)];
    residual[u] = r;
    if (r < a[u] - kFeasTol) {
      throw InfeasibleStateError("gibbs_truncated_sweep: input violates constraint row " +
                                 std::to_string(u));
    }
  }

  for (int s = 0; s < t; ++s) {
    double lo = -kInf, hi = kInf;
    const double xs = state[static_cast<std::size_t>(s)];
    for (int u = s; u < t; ++u) {
      const double coef = gamma(u, s);
      if (coef == 0.0) continue;
      const double bound = (a[u] - (residual[u] - coef * xs)) / coef;
      if (coef > 0.0) {
        lo = std::max(lo, bound);
      } else {
        hi = std::min(hi, bound);
      }
    }
    // The current value sits inside [lo, hi] by feasibility; guard against
    // roundoff collapsing the interval.
    double draw;
    if (lo >= hi) {
      draw = xs;
    } else {
      draw = truncated_normal_interval(lo, hi, rng);
    }
    const double delta = draw - xs;
    if (delta != 0.0) {
      for (int u = s; u < t; ++u) residual[u] += gamma(u, s) * delta;
      state[static_cast<std::size_t>(s)] = draw;
    }
  }
}

}  // namespace wfsmc
