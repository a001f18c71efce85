#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gjg/params.hpp"

namespace gjg {

/// A finite subset of the ground set {0, ..., v-1}, stored sorted and
/// duplicate-free. Whether it is a vertex of a particular J(v,k,i) is a
/// separate question (see is_vertex).
class VertexSet {
 public:
  VertexSet() = default;

  /// Sorts the input. Throws Error{InvalidSet} on duplicates or negatives.
  explicit VertexSet(std::vector<int> elements);
  VertexSet(std::initializer_list<int> elements);

  /// {first, first+1, ..., last-1}.
  static VertexSet range(int first, int last);

  /// Bit e set for each element e (all elements must be < 64).
  static VertexSet from_mask(std::uint64_t mask);
  std::uint64_t to_mask() const;

  std::span<const int> elements() const noexcept { return elements_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(int e) const noexcept;

  /// The first `count` elements in increasing order.
  VertexSet smallest(int count) const;
  /// Elements at sorted positions [first, last).
  VertexSet slice(int first, int last) const;

  /// {0..v-1} minus this set.
  VertexSet complement(int v) const;

  /// Comma-separated elements inside braces, e.g. "{0,1,4}".
  std::string to_string() const;

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  struct Sorted {};
  VertexSet(Sorted, std::vector<int> elements) : elements_(std::move(elements)) {}

  std::vector<int> elements_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

int intersection_size(const VertexSet& a, const VertexSet& b);

/// True iff s has exactly k elements, all in [0, v).
bool is_vertex(const Parameters& p, const VertexSet& s);

/// Parses "0,1,2" (optionally braced, whitespace tolerated).
/// Throws Error{InvalidSet} on malformed input.
VertexSet parse_vertex_set(std::string_view text);

}  // namespace gjg
