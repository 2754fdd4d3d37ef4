#ifndef WFSMC_ADAPTATION_HPP
#define WFSMC_ADAPTATION_HPP

#include <span>
#include <vector>

namespace wfsmc {

/// ESS of the incremental weights exp(delta * log_lik), computed in log
/// domain so large log-likelihood spreads cannot overflow.
double ess_of_exponent(std::span<const double> log_liks, double delta);

/// Smallest delta in (0, delta_max] at which the incremental-weight ESS
/// falls to `target_ess`. ESS(delta) is monotone non-increasing for this
/// exponential family, so bisection (80 iterations) brackets the unique
/// root; if even delta_max keeps the ESS at or above the target, delta_max
/// is returned. |ESS(result) - target| <= tol whenever the root is interior.
double ess_exponent_root(std::span<const double> log_liks, double delta_max,
                         double target_ess, double tol);

/// Next tempering exponent: smallest gamma in (gamma_prev, 1] with
/// ESS(gamma - gamma_prev) ~= alpha * n_eff_base, or exactly 1 when the full
/// remaining step keeps the ESS above the target.
double next_exponent(std::span<const double> log_liks, double gamma_prev,
                     double alpha, std::size_t n_eff_base);

/// Chain-length target of the adaptive-P controller: the smallest
/// current_p * 2^j (j >= 0) that reaches kappa times the autocorrelation
/// time. act_estimate is floored at 0.5 (a white-noise chain under the
/// v_inf / 2 Var convention).
int adaptive_p_target(double act_estimate, double kappa, int current_p);

/// An increasing sequence of exponents in [0, 1], starting at 0. The run is
/// finished once the last element is exactly 1.
class TemperSchedule {
 public:
  /// Record the exponent for step t; t must equal size() (append) or
  /// size()-1 (replace, used when adaptive-P re-selects after doubling).
  void set(int t, double exponent);

  double at(int t) const { return exponents_.at(static_cast<std::size_t>(t)); }
  double last() const { return exponents_.back(); }
  /// Increment gamma_t - gamma_{t-1} (gamma_{-1} := 0).
  double delta(int t) const;
  int size() const { return static_cast<int>(exponents_.size()); }
  bool complete() const { return !exponents_.empty() && exponents_.back() >= 1.0; }
  const std::vector<double>& exponents() const { return exponents_; }
  void reset() { exponents_.clear(); }

 private:
  std::vector<double> exponents_;
};

}  // namespace wfsmc

#endif
