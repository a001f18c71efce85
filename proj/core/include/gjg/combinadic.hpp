#pragma once

#include <compare>
#include <cstdint>
#include <limits>

#include "gjg/params.hpp"
#include "gjg/vertex_set.hpp"

namespace gjg {

/// Binomial coefficient C(n, r); 0 when r < 0 or r > n. Saturates at
/// UINT64_MAX instead of overflowing.
std::uint64_t binomial(int n, int r) noexcept;

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// Position of a k-subset in colexicographic order, in [0, C(v,k)).
///
/// Colex rank of e_0 < e_1 < ... < e_{k-1} is sum_j C(e_j, j+1). It does not
/// depend on v, so ranks of subsets of a smaller ground set are stable when
/// v grows; numerically it is the order of the subsets' bitmasks.
struct Rank {
  std::uint64_t value = 0;

  friend auto operator<=>(const Rank&, const Rank&) = default;
};

/// Throws Error{InvalidSet} if s is not a k-subset of {0..v-1}.
Rank rank(const Parameters& p, const VertexSet& s);

/// Inverse of rank(). Throws Error{OutOfRange} unless r < C(v,k).
VertexSet unrank(const Parameters& p, Rank r);

/// Mask forms used by the oracle (v <= 64).
std::uint64_t rank_mask(std::uint64_t mask) noexcept;
std::uint64_t unrank_mask(int k, std::uint64_t r) noexcept;

/// Next k-subset mask in colex order (Gosper's hack). Undefined for 0.
constexpr std::uint64_t next_colex_mask(std::uint64_t mask) noexcept {
  const std::uint64_t low = mask & (~mask + 1);
  const std::uint64_t ripple = mask + low;
  return ripple | (((mask ^ ripple) >> 2) / low);
}

}  // namespace gjg
