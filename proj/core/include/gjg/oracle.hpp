#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "gjg/params.hpp"
#include "gjg/quantity.hpp"

// Brute-force ground truth for J(v,k,i). Nothing here may depend on
// gjg/formulas.hpp: the oracle measures, it never computes closed forms.

namespace gjg {

inline constexpr std::uint64_t kDefaultVertexBudget = 20000;

/// J(v,k,i) materialized: vertex r is the k-subset of colex rank r, stored
/// as a 64-bit mask; adjacency is one bitset row per vertex.
class ExplicitGraph {
 public:
  const Parameters& params() const noexcept { return params_; }
  std::size_t vertex_count() const noexcept { return masks_.size(); }
  std::uint64_t vertex_mask(std::size_t r) const { return masks_[r]; }

  bool adjacent(std::size_t u, std::size_t w) const {
    return (row(u)[w / 64] >> (w % 64)) & 1U;
  }
  std::span<const std::uint64_t> row(std::size_t u) const {
    return {bits_.data() + u * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  /// Sorted neighbor ranks of u.
  std::vector<std::uint32_t> neighbors(std::size_t u) const;
  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const;

  /// Vertex index of a k-subset mask (its colex rank).
  std::size_t index_of(std::uint64_t mask) const;

  template <class F>
  void for_each_neighbor(std::size_t u, F&& f) const {
    const auto r = row(u);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  friend ExplicitGraph build_graph(const Parameters& p, std::uint64_t vertex_budget);
  explicit ExplicitGraph(const Parameters& p) : params_(p) {}

  Parameters params_;
  std::vector<std::uint64_t> masks_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Enumerates all k-subsets of {0..v-1} in colex order and joins every pair
/// whose intersection has exactly i elements. Throws Error{BudgetExceeded}
/// if C(v,k) > vertex_budget and Error{Unsupported} if v > 64.
ExplicitGraph build_graph(const Parameters& p, std::uint64_t vertex_budget = kDefaultVertexBudget);

/// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const ExplicitGraph& g, std::size_t source);

/// Shortest cycle length seen by a BFS from source, or Undefined if the BFS
/// closes no cycle. Equals the girth when source lies on a shortest cycle.
Quantity local_girth(const ExplicitGraph& g, std::size_t source);

/// Shortest odd closed walk through source, measured as the distance
/// between the two copies of source in the bipartite double cover.
Quantity local_odd_girth(const ExplicitGraph& g, std::size_t source);

struct OracleOptions {
  std::uint64_t seed = 0x5eed;
  /// Random sources for distance sampling; each contributes one random pair
  /// per intersection size.
  int sampled_sources = 10;
  /// Extra random sources for the girth / odd girth transitivity checks.
  int girth_sources = 3;
  /// Called with every distance BFS the oracle performs.
  std::function<void(std::size_t source, std::span<const int> dist)> on_bfs;
};

/// Distance between the canonical pair {0..k-1} and {0..x-1} ∪ {k..2k-x-1}.
/// Also checks random pairs meeting in x elements and throws
/// Error{OracleInconsistency} on any disagreement.
Quantity oracle_distance(const ExplicitGraph& g, int x, const OracleOptions& options = {});
Quantity oracle_girth(const ExplicitGraph& g, const OracleOptions& options = {});
Quantity oracle_odd_girth(const ExplicitGraph& g, const OracleOptions& options = {});
Quantity oracle_diameter(const ExplicitGraph& g, const OracleOptions& options = {});

struct OracleReport {
  Parameters params;
  int delta;
  Quantity girth;
  Quantity odd_girth;
  Quantity diameter;
  std::map<int, Quantity> distance_profile;
  bool connected;
};

OracleReport oracle_report(const ExplicitGraph& g, const OracleOptions& options = {});
OracleReport oracle_report(const Parameters& p, std::uint64_t vertex_budget = kDefaultVertexBudget,
                           const OracleOptions& options = {});

/// True iff mapping every vertex of g to its complement is an isomorphism
/// onto h. Requires h to be J(v, v-k, v-2k+i) for g = J(v,k,i).
bool complement_isomorphic(const ExplicitGraph& g, const ExplicitGraph& h);

}  // namespace gjg
