#include "gjg/combinadic.hpp"

#include <array>
#include <bit>

#include "gjg/error.hpp"

namespace gjg {
namespace {

constexpr int kTableSize = 65;

using Table = std::array<std::array<std::uint64_t, kTableSize>, kTableSize>;

constexpr Table make_table() {
  Table t{};
  for (int n = 0; n < kTableSize; ++n) {
    t[n][0] = 1;
    for (int r = 1; r <= n; ++r) {
      const std::uint64_t a = t[n - 1][r - 1];
      const std::uint64_t b = r <= n - 1 ? t[n - 1][r] : 0;
      t[n][r] = (a > kSaturated - b) ? kSaturated : a + b;
    }
  }
  return t;
}

constexpr Table kTable = make_table();

__extension__ using Wide = unsigned __int128;

}  // namespace

std::uint64_t binomial(int n, int r) noexcept {
  if (r < 0 || n < 0 || r > n) return 0;
  if (n < kTableSize) return kTable[n][r];
  if (r > n - r) r = n - r;
  // Outside the table: multiplicative formula with saturation. Each prefix
  // product C(n-r+j, j) is an integer, so the division is exact.
  Wide acc = 1;
  for (int j = 1; j <= r; ++j) {
    acc = acc * static_cast<unsigned>(n - r + j) / static_cast<unsigned>(j);
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

Rank rank(const Parameters& p, const VertexSet& s) {
  if (!is_vertex(p, s)) {
    throw Error(ErrorCode::InvalidSet, s.to_string() + " is not a " + std::to_string(p.k()) +
                                           "-subset of {0.." + std::to_string(p.v() - 1) + "}");
  }
  std::uint64_t r = 0;
  int j = 1;
  for (int e : s.elements()) r += binomial(e, j++);
  return Rank{r};
}

VertexSet unrank(const Parameters& p, Rank r) {
  if (r.value >= binomial(p.v(), p.k())) {
    throw Error(ErrorCode::OutOfRange, "rank " + std::to_string(r.value) + " >= C(" + std::to_string(p.v()) +
                                           "," + std::to_string(p.k()) + ")");
  }
  std::vector<int> out(static_cast<std::size_t>(p.k()));
  std::uint64_t rest = r.value;
  int c = p.v() - 1;
  for (int j = p.k(); j >= 1; --j) {
    // Largest c with C(c, j) <= rest; c only decreases across j.
    while (binomial(c, j) > rest) --c;
    out[static_cast<std::size_t>(j - 1)] = c;
    rest -= binomial(c, j);
    --c;
  }
  return VertexSet(std::move(out));
}

std::uint64_t rank_mask(std::uint64_t mask) noexcept {
  std::uint64_t r = 0;
  int j = 1;
  while (mask != 0) {
    r += binomial(std::countr_zero(mask), j++);
    mask &= mask - 1;
  }
  return r;
}

std::uint64_t unrank_mask(int k, std::uint64_t r) noexcept {
  std::uint64_t mask = 0;
  int c = 63;
  for (int j = k; j >= 1; --j) {
    while (binomial(c, j) > r) --c;
    mask |= std::uint64_t{1} << c;
    r -= binomial(c, j);
    --c;
  }
  return mask;
}

}  // namespace gjg
