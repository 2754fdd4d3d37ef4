#ifndef WFSMC_CHAIN_ARRAY_HPP
#define WFSMC_CHAIN_ARRAY_HPP

#include <cassert>
#include <cstddef>
#include <vector>

namespace wfsmc {

/// The M x P arrangement of waste-free particles: M chains of length P,
/// flattened row-major so that particle (m, p) sits at index m*P + p.
/// Rows all have equal length; the flattening order is deterministic.
template <class State>
class ChainArray {
 public:
  ChainArray(std::size_t num_chains, std::size_t chain_len)
      : rows_(num_chains, std::vector<State>(chain_len)) {}

  explicit ChainArray(std::vector<std::vector<State>> rows) : rows_(std::move(rows)) {
    for (const auto& r : rows_) assert(r.size() == rows_.front().size());
  }

  std::size_t num_chains() const { return rows_.size(); }
  std::size_t chain_len() const { return rows_.empty() ? 0 : rows_.front().size(); }
  std::size_t size() const { return num_chains() * chain_len(); }

  std::vector<State>& row(std::size_t m) { return rows_[m]; }
  const std::vector<State>& row(std::size_t m) const { return rows_[m]; }

  const State& at(std::size_t m, std::size_t p) const { return rows_[m][p]; }
  State& at(std::size_t m, std::size_t p) { return rows_[m][p]; }

  /// Row-major copy of all states.
  std::vector<State> flatten() const {
    std::vector<State> flat;
    flat.reserve(size());
    for (const auto& r : rows_)
      for (const auto& s : r) flat.push_back(s);
    return flat;
  }

  /// Row-major evaluation of a scalar function over all states.
  template <class Phi>
  std::vector<double> values(Phi&& phi) const {
    std::vector<double> out;
    out.reserve(size());
    for (const auto& r : rows_)
      for (const auto& s : r) out.push_back(phi(s));
    return out;
  }

 private:
  std::vector<std::vector<State>> rows_;
};

}  // namespace wfsmc

#endif
