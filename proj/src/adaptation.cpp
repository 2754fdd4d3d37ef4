#include "wfsmc/adaptation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "wfsmc/errors.hpp"
#include "wfsmc/log_weights.hpp"

namespace wfsmc {

double ess_of_exponent(std::span<const double> log_liks, double delta) {
  // ESS = (sum e^{d l})^2 / sum e^{2 d l}, both sums anchored at the max.
  std::vector<double> scaled(log_liks.size());
  std::vector<double> scaled2(log_liks.size());
  for (std::size_t i = 0; i < log_liks.size(); ++i) {
    scaled[i] = delta * log_liks[i];
    scaled2[i] = 2.0 * delta * log_liks[i];
  }
  return std::exp(2.0 * log_sum_exp(scaled) - log_sum_exp(scaled2));
}

double ess_exponent_root(std::span<const double> log_liks, double delta_max,
                         double target_ess, double tol) {
  assert(delta_max > 0.0);
  if (ess_of_exponent(log_liks, delta_max) >= target_ess) return delta_max;
  double lo = 0.0, hi = delta_max;
  double mid = delta_max;
  for (int iter = 0; iter < 80; ++iter) {
    mid = 0.5 * (lo + hi);
    const double e = ess_of_exponent(log_liks, mid);
    if (std::abs(e - target_ess) <= tol) return mid;
    if (e > target_ess) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

double next_exponent(std::span<const double> log_liks, double gamma_prev,
                     double alpha, std::size_t n_eff_base) {
  assert(gamma_prev < 1.0);
  const double remaining = 1.0 - gamma_prev;
  constexpr double kClamp = 1e-12;
  if (remaining <= kClamp) return 1.0;
  const double target = alpha * static_cast<double>(n_eff_base);
  const double tol = 1e-6 * static_cast<double>(n_eff_base);
  const double delta = ess_exponent_root(log_liks, remaining, target, tol);
  if (delta >= remaining) return 1.0;
  return gamma_prev + delta;
}

int adaptive_p_target(double act_estimate, double kappa, int current_p) {
  assert(kappa >= 1.0);
  assert(current_p >= 1);
  const double act = std::max(act_estimate, 0.5);
  const double required = kappa * act;
  int p = current_p;
  while (static_cast<double>(p) < required) {
    if (p > (1 << 29)) throw std::overflow_error("adaptive_p_target: target overflows");
    p *= 2;
  }
  return p;
}

void TemperSchedule::set(int t, double exponent) {
  if (t == size()) {
    exponents_.push_back(exponent);
  } else if (t == size() - 1) {
    exponents_.back() = exponent;
  } else {
    throw std::logic_error("TemperSchedule::set: steps must be recorded in order");
  }
  if (size() >= 2 && exponents_[exponents_.size() - 2] >= exponents_.back()) {
    throw std::logic_error("TemperSchedule::set: exponents must be strictly increasing");
  }
}

double TemperSchedule::delta(int t) const {
  const double cur = at(t);
  return t == 0 ? cur : cur - at(t - 1);
}

}  // namespace wfsmc
