#include "gjg/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <iterator>

#include "gjg/error.hpp"

namespace gjg {

VertexSet::VertexSet(std::vector<int> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw Error(ErrorCode::InvalidSet, "duplicate element");
  }
  if (!elements_.empty() && elements_.front() < 0) {
    throw Error(ErrorCode::InvalidSet, "negative element");
  }
}

VertexSet::VertexSet(std::initializer_list<int> elements)
    : VertexSet(std::vector<int>(elements)) {}

VertexSet VertexSet::range(int first, int last) {
  std::vector<int> out;
  for (int e = first; e < last; ++e) out.push_back(e);
  return VertexSet(Sorted{}, std::move(out));
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return VertexSet(Sorted{}, std::move(out));
}

std::uint64_t VertexSet::to_mask() const {
  std::uint64_t mask = 0;
  for (int e : elements_) {
    if (e >= 64) throw Error(ErrorCode::InvalidSet, "element " + std::to_string(e) + " does not fit a 64-bit mask");
    mask |= std::uint64_t{1} << e;
  }
  return mask;
}

bool VertexSet::contains(int e) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

VertexSet VertexSet::smallest(int count) const { return slice(0, count); }

VertexSet VertexSet::slice(int first, int last) const {
  if (first < 0 || last < first || last > size()) {
    throw Error(ErrorCode::OutOfRange, "slice [" + std::to_string(first) + "," + std::to_string(last) +
                                           ") of a " + std::to_string(size()) + "-set");
  }
  return VertexSet(Sorted{}, std::vector<int>(elements_.begin() + first, elements_.begin() + last));
}

VertexSet VertexSet::complement(int v) const { return range(0, v) - *this; }

std::string VertexSet::to_string() const {
  std::string out = "{";
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    if (j != 0) out += ',';
    out += std::to_string(elements_[j]);
  }
  out += '}';
  return out;
}

VertexSet operator|(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_union(a.elements_.begin(), a.elements_.end(), b.elements_.begin(), b.elements_.end(),
                 std::back_inserter(out));
  return VertexSet(VertexSet::Sorted{}, std::move(out));
}

VertexSet operator&(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_intersection(a.elements_.begin(), a.elements_.end(), b.elements_.begin(), b.elements_.end(),
                        std::back_inserter(out));
  return VertexSet(VertexSet::Sorted{}, std::move(out));
}

VertexSet operator-(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_difference(a.elements_.begin(), a.elements_.end(), b.elements_.begin(), b.elements_.end(),
                      std::back_inserter(out));
  return VertexSet(VertexSet::Sorted{}, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) { return os << s.to_string(); }

int intersection_size(const VertexSet& a, const VertexSet& b) {
  auto ea = a.elements();
  auto eb = b.elements();
  int count = 0;
  auto ia = ea.begin();
  auto ib = eb.begin();
  while (ia != ea.end() && ib != eb.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

bool is_vertex(const Parameters& p, const VertexSet& s) {
  return s.size() == p.k() && (s.empty() || s.elements().back() < p.v());
}

VertexSet parse_vertex_set(std::string_view text) {
  std::vector<int> out;
  auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw Error(ErrorCode::InvalidSet, "unbalanced brace");
    text = text.substr(1, text.size() - 2);
  }
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  if (text.empty()) return VertexSet{};

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && is_space(item.front())) item.remove_prefix(1);
    while (!item.empty() && is_space(item.back())) item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::InvalidSet, "bad element '" + std::string(item) + "'");
    }
    out.push_back(value);
    pos = end + 1;
  }
  return VertexSet(std::move(out));
}

}  // namespace gjg
