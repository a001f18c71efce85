#pragma once

#include <string_view>
#include <vector>

#include "gjg/params.hpp"
#include "gjg/vertex_set.hpp"

namespace gjg {

enum class WalkKind { Path, Cycle, ClosedWalk };

std::string_view to_string(WalkKind kind) noexcept;

/// A vertex sequence in J(v,k,i) together with what it claims to be.
/// Consecutive vertices must meet in exactly i elements.
struct Walk {
  std::vector<VertexSet> vertices;
  WalkKind kind = WalkKind::Path;
  int claimed_length = 0;
};

/// {0, ..., k-1}.
VertexSet canonical_vertex(const Parameters& p);

/// {0, ..., x-1} ∪ {k, ..., 2k-x-1}: meets canonical_vertex in x elements.
/// Throws Error{OutOfRange} unless max(0, 2k-v) <= x <= k.
VertexSet canonical_partner(const Parameters& p, int x);

// All constructions below pick "the smallest available elements" whenever a
// choice exists, so identical inputs give identical output. Inputs with
// v < 2k are solved on the complement triple and mapped back.

/// A vertex adjacent to both a and b. Throws Error{NoCommonNeighbor} when
/// none exists.
VertexSet common_neighbor(const Parameters& p, const VertexSet& a, const VertexSet& b);

/// Shortest path from a to b. Throws Error{Disconnected} for non-adjacent
/// distinct vertices of a Matching, Error{DegenerateClass} for graphs without
/// edges, Error{InvalidSet} if a or b is not a vertex.
Walk geodesic(const Parameters& p, const VertexSet& a, const VertexSet& b);

/// A cycle whose length is the girth.
Walk shortest_cycle(const Parameters& p);

/// A closed walk whose length is the odd girth.
Walk odd_closed_walk(const Parameters& p);

/// Checks every structural claim of w against p: each entry is a vertex,
/// consecutive entries are adjacent, claimed_length matches, and the
/// distinctness/closure rules of w.kind hold.
bool verify_walk(const Parameters& p, const Walk& w);

}  // namespace gjg
