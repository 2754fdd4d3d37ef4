#include "wfsmc/rng.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>

namespace wfsmc {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t splitmix64(std::uint64_t& x) {
  x += kGolden;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t mix_path(std::uint64_t key, std::uint64_t element) {
  // Feed the path element through one splitmix round keyed on the parent.
  std::uint64_t x = key ^ (element + kGolden + (key << 6) + (key >> 2));
  std::uint64_t s = x;
  return splitmix64(s);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RngStream::RngStream(std::uint64_t key, bool) : key_(key) {
  std::uint64_t s = key;
  state_[0] = splitmix64(s);
  state_[1] = splitmix64(s);
  state_[2] = splitmix64(s);
  state_[3] = splitmix64(s);
}

RngStream::RngStream(std::uint64_t seed) : RngStream(mix_path(0x57465343u /*"WFSC"*/, seed), true) {}

RngStream::RngStream(std::uint64_t seed, std::initializer_list<std::uint64_t> path)
    : RngStream(seed, std::span<const std::uint64_t>(path.begin(), path.size())) {}

RngStream::RngStream(std::uint64_t seed, std::span<const std::uint64_t> path) : RngStream(seed) {
  std::uint64_t key = key_;
  for (std::uint64_t p : path) key = mix_path(key, p);
  *this = RngStream(key, true);
}

RngStream RngStream::child(std::uint64_t index) const {
  return RngStream(mix_path(key_, index), true);
}

RngStream RngStream::child(std::uint64_t i, std::uint64_t j) const {
  return RngStream(mix_path(mix_path(key_, i), j), true);
}

std::uint64_t RngStream::next_u64() {
  // xoshiro256++
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RngStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform01_open_zero() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

std::uint64_t RngStream::uniform_int(std::uint64_t n) {
  assert(n >= 1);
  // Rejection from the top to kill modulo bias.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n);
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return x % n;
}

double RngStream::standard_normal() {
  const double u1 = uniform01_open_zero();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double RngStream::exponential() {
  return -std::log(uniform01_open_zero());
}

double truncated_normal_lower(double lower, RngStream& rng) {
  if (std::isinf(lower) && lower < 0.0) return rng.standard_normal();
  // Robert (1995): below the crossover, plain rejection already accepts at
  // rate Phi(-lower) >= Phi(-0.47) ~ 0.32.
  constexpr double kCrossover = 0.47;
  if (lower <= kCrossover) {
    for (;;) {
      const double z = rng.standard_normal();
      if (z >= lower) return z;
    }
  }
  // Shifted-exponential proposal with the optimal rate.
  const double rate = 0.5 * (lower + std::sqrt(lower * lower + 4.0));
  for (;;) {
    const double z = lower + rng.exponential() / rate;
    const double d = z - rate;
    if (std::log(rng.uniform01_open_zero()) <= -0.5 * d * d) return z;
  }
}

double truncated_normal_interval(double lower, double upper, RngStream& rng) {
  assert(lower < upper);
  const bool lo_inf = std::isinf(lower) && lower < 0.0;
  const bool hi_inf = std::isinf(upper) && upper > 0.0;
  if (hi_inf) return truncated_normal_lower(lower, rng);
  if (lo_inf) return -truncated_normal_lower(-upper, rng);
  // Mirror so that the interval sits on the right half-line or straddles 0.
  if (upper <= 0.0) return -truncated_normal_interval(-upper, -lower, rng);
  if (lower <= 0.0) {
    // Interval straddles 0. Wide: plain rejection. Narrow: uniform proposal.
    if (upper - lower >= 1.0) {
      for (;;) {
        const double z = rng.standard_normal();
        if (z >= lower && z <= upper) return z;
      }
    }
    for (;;) {
      const double z = lower + (upper - lower) * rng.uniform01();
      if (std::log(rng.uniform01_open_zero()) <= -0.5 * z * z) return z;
    }
  }
  // 0 < lower < upper. One-sided rejection is efficient when the interval
  // holds most of the tail mass; otherwise use a uniform proposal with the
  // density ratio anchored at the left edge.
  const double rate = 0.5 * (lower + std::sqrt(lower * lower + 4.0));
  if ((upper - lower) * rate >= 1.0) {
    for (;;) {
      const double z = truncated_normal_lower(lower, rng);
      if (z <= upper) return z;
    }
  }
  for (;;) {
    const double z = lower + (upper - lower) * rng.uniform01();
    if (std::log(rng.uniform01_open_zero()) <= 0.5 * (lower * lower - z * z)) return z;
  }
}

namespace {

// log(erfcx(z)) for z >= ~3 via the Laplace continued fraction
//   sqrt(pi) e^{z^2} erfc(z) = 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
// evaluated with the modified Lentz scheme.
double log_erfcx_cf(double z) {
  double f = 1e-300, c = f, d = 0.0;
  for (int n = 1; n <= 300; ++n) {
    const double a = (n == 1) ? 1.0 : 0.5 * static_cast<double>(n - 1);
    d = z + a * d;
    if (d == 0.0) d = 1e-300;
    d = 1.0 / d;
    c = z + a / c;
    if (c == 0.0) c = 1e-300;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::log(f) - 0.5 * std::log(std::numbers::pi);
}

}  // namespace

double log_normal_cdf_neg(double x) {
  // log Phi(-x) = log(0.5 erfc(x/sqrt(2)))
  const double z = x / std::numbers::sqrt2;
  if (x <= 5.0) {
    if (x <= -5.0) {
      // Phi(-x) ~ 1; log Phi(-x) = log1p(-Phi(x)) with Phi(x) tiny.
      return std::log1p(-0.5 * std::erfc(-z));
    }
    return std::log(0.5 * std::erfc(z));
  }
  // Tail: erfc(z) = erfcx(z) exp(-z^2), so log erfc = log erfcx - z^2.
  return std::log(0.5) + log_erfcx_cf(z) - z * z;
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

}  // namespace wfsmc
