#pragma once

#include <map>

#include "gjg/params.hpp"
#include "gjg/quantity.hpp"

namespace gjg {

/// Closed-form invariants of J(v,k,i).
///
/// Throughout, Δ = v - 2k + 2i. The x-dependent operations (common
/// neighbor, distance) take the intersection size in normalized
/// coordinates (v >= 2k) and throw Error{NotNormalized} otherwise; the
/// complement-invariant ones (girth, odd girth, diameter) normalize
/// internally.

struct InvariantReport {
  Parameters params;
  int delta;
  Quantity girth;
  Quantity odd_girth;
  Quantity diameter;
  /// Keyed by |A ∩ B| over [max(0, 2k-v), k] in the caller's coordinates.
  std::map<int, Quantity> distance_profile;
};

/// ceil(a / b) for a >= 0, b > 0.
int ceil_div(int a, int b);

/// Whether two vertices meeting in x elements have a common neighbor:
/// x >= max(k - Δ, 2i - k).
bool has_common_neighbor(const Parameters& p, int x);

Quantity girth(const Parameters& p);

/// 2 ceil((k - i) / Δ) + 1; Undefined for Matching and degenerate classes.
Quantity odd_girth(const Parameters& p);

/// min(2 ceil((k-x)/Δ), 2 ceil((x-i)/Δ) + 1), the distance for x >= i.
int parity_bounded_distance(const Parameters& p, int x);

/// dist(A, B) as a function of x = |A ∩ B|:
///   3                         if x < min(i, k - Δ)
///   ceil((k - x) / (k - i))   if k - Δ <= x < i
///   parity_bounded_distance   if x >= i
/// Matching: 0 at x = k, 1 at x = 0, infinite otherwise.
Quantity distance_by_intersection(const Parameters& p, int x);

/// Infinite for Matching with k >= 2 (J(2,1,0) is a single edge, diameter
/// 1); throws Error{DegenerateClass} on Edgeless and
/// EmptyVertexSet.
Quantity diameter(const Parameters& p);

/// Maximum of parity_bounded_distance over x in {i+1, ..., k}, in closed
/// form ceil((k - i - 1) / Δ) + 1. Throws Error{Unsupported} if k = i + 1.
int max_f(const Parameters& p);

/// Total over all triples accepted by make_parameters. Inputs with v < 2k
/// are evaluated on the complement triple and re-indexed.
InvariantReport invariant_report(const Parameters& p);

}  // namespace gjg
