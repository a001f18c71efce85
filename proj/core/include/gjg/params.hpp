#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace gjg {

/// Exactly one tag per triple, assigned with precedence
/// EmptyVertexSet > Edgeless > Matching > OddGraph > JohnsonGraph >
/// KneserGraph > Standard.
///
/// EmptyVertexSet covers k = i or v = k: there is no pair of distinct
/// vertices meeting in i elements, so the graph has no edges at all.
/// Edgeless covers v < 2k with i < 2k - v: any two k-subsets meet in more
/// than i elements.
enum class GraphClass {
  Standard,
  OddGraph,
  KneserGraph,
  JohnsonGraph,
  Matching,
  Edgeless,
  EmptyVertexSet,
};

std::string_view to_string(GraphClass c) noexcept;

/// Standard or one of its refinements (odd, Kneser, Johnson).
bool is_standard(GraphClass c) noexcept;

/// Edgeless or EmptyVertexSet.
bool is_degenerate(GraphClass c) noexcept;

/// Validated triple (v, k, i). Construction accepts the weak order
/// v >= k >= i >= 0 and classifies; everything else is rejected.
class Parameters {
 public:
  /// Throws Error{InvalidOrder} unless v >= k >= i >= 0.
  static Parameters make(int v, int k, int i);

  int v() const noexcept { return v_; }
  int k() const noexcept { return k_; }
  int i() const noexcept { return i_; }
  GraphClass graph_class() const noexcept { return class_; }

  /// v >= 2k, the coordinates in which all closed forms are stated.
  bool is_normalized() const noexcept { return v_ >= 2 * k_; }

  /// Smallest possible |A ∩ B| for two k-subsets: max(0, 2k - v).
  int min_intersection() const noexcept { return 2 * k_ > v_ ? 2 * k_ - v_ : 0; }

  std::string to_string() const;

  friend bool operator==(const Parameters& a, const Parameters& b) noexcept {
    return a.v_ == b.v_ && a.k_ == b.k_ && a.i_ == b.i_;
  }
  friend std::strong_ordering operator<=>(const Parameters& a, const Parameters& b) noexcept {
    if (auto c = a.v_ <=> b.v_; c != 0) return c;
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.i_ <=> b.i_;
  }

 private:
  Parameters(int v, int k, int i, GraphClass c) : v_(v), k_(k), i_(i), class_(c) {}

  int v_;
  int k_;
  int i_;
  GraphClass class_;
};

std::ostream& operator<<(std::ostream& os, const Parameters& p);

Parameters make_parameters(int v, int k, int i);

GraphClass classify(int v, int k, int i);

/// Maps v < 2k to the isomorphic complement triple (v, v-k, v-2k+i);
/// identity when v >= 2k. Throws Error{DegenerateClass} on Edgeless or
/// EmptyVertexSet input.
Parameters normalize(const Parameters& p);

/// v - 2k + 2i. Unchanged by normalize().
int delta(const Parameters& p) noexcept;

}  // namespace gjg
