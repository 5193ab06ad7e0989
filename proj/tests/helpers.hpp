#pragma once

// Shared test utilities: seeded generators and independent brute-force
// oracles. Everything here stays independent of the production code paths it
// is used to check.

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "permspec/permutation.hpp"
#include "permspec/rng.hpp"

namespace testutil {

using permspec::Rng;
using permspec::permutations::CycleType;
using permspec::permutations::Permutation;

inline CycleType random_cycle_type(std::int64_t n, Rng& rng) {
  return permspec::permutations::cycle_type(
      permspec::permutations::random_permutation(n, rng));
}

/// All partitions of n as cycle-type count maps, lengths descending inside
/// the recursion so each partition appears once.
inline void partitions_rec(std::int64_t remaining, std::int64_t max_part,
                           std::map<std::int64_t, std::int64_t>& current,
                           std::vector<std::map<std::int64_t, std::int64_t>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
    ++current[part];
    partitions_rec(remaining - part, part, current, out);
    if (--current[part] == 0) current.erase(part);
  }
}

inline std::vector<CycleType> partitions(std::int64_t n) {
  std::vector<std::map<std::int64_t, std::int64_t>> raw;
  std::map<std::int64_t, std::int64_t> current;
  partitions_rec(n, n, current, raw);
  std::vector<CycleType> out;
  out.reserve(raw.size());
  for (auto& counts : raw) out.push_back(CycleType{n, std::move(counts)});
  return out;
}

/// Exact integer polynomial product oracle: expands prod_i (X^i - 1)^{m_i},
/// ascending coefficients. Throws if a coefficient leaves the 64-bit range.
inline std::vector<std::int64_t> charpoly_of_type(const CycleType& type) {
  std::vector<std::int64_t> poly{1};
  auto times_factor = [&](std::int64_t i) {
    // poly *= (X^i - 1)
    std::vector<std::int64_t> next(poly.size() + static_cast<std::size_t>(i), 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      __int128 hi = static_cast<__int128>(next[d + static_cast<std::size_t>(i)]) + poly[d];
      __int128 lo = static_cast<__int128>(next[d]) - poly[d];
      if (hi > INT64_MAX || hi < INT64_MIN || lo > INT64_MAX || lo < INT64_MIN)
        throw std::overflow_error("oracle coefficient out of range");
      next[d + static_cast<std::size_t>(i)] = static_cast<std::int64_t>(hi);
      next[d] = static_cast<std::int64_t>(lo);
    }
    poly = std::move(next);
  };
  for (const auto& [len, mult] : type.counts)
    for (std::int64_t j = 0; j < mult; ++j) times_factor(len);
  return poly;
}

/// Normalized trace of the k-th power straight from the image array: count
/// fixed points of p^k by walking each point k steps. O(n k), no cycle logic.
inline double trace_power_walk(const Permutation& p, std::int64_t k) {
  std::int64_t fixed = 0;
  for (std::int64_t start = 0; start < p.size(); ++start) {
    std::int64_t x = start;
    for (std::int64_t step = 0; step < k; ++step) x = p(x);
    if (x == start) ++fixed;
  }
  return static_cast<double>(fixed) / static_cast<double>(p.size());
}

}  // namespace testutil
