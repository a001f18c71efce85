#include "gjg/witness.hpp"

#include <algorithm>
#include <string>

#include "gjg/error.hpp"
#include "gjg/formulas.hpp"

namespace gjg {
namespace {

using Path = std::vector<VertexSet>;

void require_vertex(const Parameters& p, const VertexSet& s) {
  if (!is_vertex(p, s)) {
    throw Error(ErrorCode::InvalidSet, s.to_string() + " is not a vertex of " + p.to_string());
  }
}

void require_cycles(const Parameters& p) {
  if (!is_standard(p.graph_class())) {
    throw Error(ErrorCode::DegenerateClass,
                p.to_string() + " is " + std::string(to_string(p.graph_class())) + " and has no cycles");
  }
}

Walk make_walk(Path vertices, WalkKind kind) {
  const int length = static_cast<int>(vertices.size()) - 1;
  return Walk{std::move(vertices), kind, length};
}

// Everything below works in normalized coordinates (v >= 2k).

VertexSet neighbor_of_both(const Parameters& q, const VertexSet& a, const VertexSet& b) {
  const int k = q.k(), i = q.i();
  const int x = intersection_size(a, b);
  if (!has_common_neighbor(q, x)) {
    throw Error(ErrorCode::NoCommonNeighbor,
                a.to_string() + " and " + b.to_string() + " have no common neighbor in " + q.to_string());
  }
  // Sizes of the four regions of the new vertex: s from A∩B, i-s from each
  // of A\B and B\A, the rest from outside A∪B.
  const int s = std::max({0, i + x - k, 2 * i - k});
  const VertexSet outside = (a | b).complement(q.v());
  return (a & b).smallest(s) | (a - b).smallest(i - s) | (b - a).smallest(i - s) |
         outside.smallest(k - 2 * i + s);
}

Path shortest_path(const Parameters& q, const VertexSet& a, const VertexSet& b);

// x > i, even route: alternate between sets built from A∖B and B∖A,
// gaining Δ elements of B every two steps, then close with a common
// neighbor.
Path even_route(const Parameters& q, const VertexSet& a, const VertexSet& b) {
  const int k = q.k(), i = q.i(), d = delta(q);
  const int x = intersection_size(a, b);
  const int steps = ceil_div(k - x, d) - 1;
  const VertexSet both = a & b;
  const VertexSet outside = (a | b).complement(q.v());
  const VertexSet only_a = a - b;
  const VertexSet only_b = b - a;
  const int rest = k - x;

  Path path{a};
  for (int j = 1; j <= steps; ++j) {
    path.push_back(outside | only_a.smallest((j - 1) * d + i) | only_b.slice(j * d - i, rest));
    path.push_back(both | only_b.smallest(j * d) | only_a.slice(j * d, rest));
  }
  path.push_back(neighbor_of_both(q, path.back(), b));
  path.push_back(b);
  return path;
}

Path shortest_path(const Parameters& q, const VertexSet& a, const VertexSet& b) {
  const int k = q.k(), i = q.i(), d = delta(q);
  const int x = intersection_size(a, b);
  if (x == k) return {a};
  if (x == i) return {a, b};
  if (q.graph_class() == GraphClass::Matching) {
    throw Error(ErrorCode::Disconnected,
                a.to_string() + " and " + b.to_string() + " lie in different components of " + q.to_string());
  }

  const VertexSet both = a & b;
  const VertexSet only_a = a - b;
  const VertexSet only_b = b - a;

  if (x < i) {
    if (x < k - d) {
      // One step to a vertex that shares enough with B to reach it in two.
      const VertexSet c = only_a.smallest(i - x) | both | only_b.smallest(k - i);
      return {a, c, neighbor_of_both(q, c, b), b};
    }
    if (x >= 2 * i - k) return {a, neighbor_of_both(q, a, b), b};

    // Swap k-i elements of A∖B for B∖A per step until a common neighbor
    // with B appears.
    const int steps = ceil_div(k - x, k - i) - 2;
    Path path{a};
    for (int j = 1; j <= steps; ++j) {
      path.push_back(only_b.smallest(j * (k - i)) | only_a.slice(j * (k - i), k - x) | both);
    }
    path.push_back(neighbor_of_both(q, path.back(), b));
    path.push_back(b);
    return path;
  }

  const int even = 2 * ceil_div(k - x, d);
  const int odd = 2 * ceil_div(x - i, d) + 1;
  if (odd < even) {
    // Step to A' = (B∖C') ∪ D', which meets B in k - x + i elements, then
    // take the even route from there.
    const VertexSet outside = (a | b).complement(q.v());
    const VertexSet next = (b - both.smallest(x - i)) | outside.smallest(x - i);
    Path path{a};
    const Path tail = even_route(q, next, b);
    path.insert(path.end(), tail.begin(), tail.end());
    return path;
  }
  return even_route(q, a, b);
}

Path triangle(const Parameters& q) {
  const VertexSet a = canonical_vertex(q);
  const VertexSet b = canonical_partner(q, q.i());
  return {a, b, neighbor_of_both(q, a, b), a};
}

// A, B at distance k, B, C at distance k, C adjacent to A (0-based labels).
Path odd_graph_walk(const Parameters& q) {
  const int k = q.k();
  const int d = k / 2;
  VertexSet a, b, c;
  if (k % 2 == 0) {
    a = VertexSet::range(0, 2 * d);
    b = VertexSet::range(d, 3 * d);
    c = VertexSet::range(2 * d, 4 * d);
  } else {
    a = VertexSet::range(0, 2 * d + 1);
    b = VertexSet::range(d + 1, 3 * d + 2);
    c = VertexSet::range(2 * d + 2, 4 * d + 3);
  }
  Path walk = shortest_path(q, a, b);
  const Path second = shortest_path(q, b, c);
  walk.insert(walk.end(), second.begin() + 1, second.end());
  walk.push_back(a);
  return walk;
}

// Girth 4: an edge AB plus a vertex C at distance r = ceil((k-i)/Δ) from
// both ends.
Path girth_four_odd_walk(const Parameters& q) {
  const int k = q.k(), i = q.i(), d = delta(q);
  const int r = ceil_div(k - i, d);
  const VertexSet a = canonical_vertex(q);
  const VertexSet b = canonical_partner(q, i);
  const VertexSet only_a = a - b;
  const VertexSet only_b = b - a;

  VertexSet c;
  if (r % 2 == 1) {
    const int t = k + i - d;
    c = only_a.smallest(t / 2) | only_b.smallest(t - t / 2) | (a | b).complement(q.v());
  } else {
    const int t = k + i;
    c = only_a.smallest(t / 2 - i) | only_b.smallest(t - t / 2 - i) | (a & b);
  }

  Path walk = shortest_path(q, a, c);
  Path back = shortest_path(q, b, c);
  std::reverse(back.begin(), back.end());
  walk.insert(walk.end(), back.begin() + 1, back.end());
  walk.push_back(a);
  return walk;
}

// Odd graphs with k > 2 have girth 6: S ∪ {a_j} for three a_j, joined
// through the unique common neighbors (complements of S ∪ {a_j, a_l}).
Path odd_graph_hexagon(const Parameters& q) {
  const int k = q.k();
  const VertexSet core = VertexSet::range(0, k - 1);
  const VertexSet a1 = core | VertexSet{k - 1};
  const VertexSet a2 = core | VertexSet{k};
  const VertexSet a3 = core | VertexSet{k + 1};
  auto joint = [&](const VertexSet& x, const VertexSet& y) { return (x | y).complement(q.v()); };
  return {a1, joint(a1, a2), a2, joint(a2, a3), a3, joint(a3, a1), a1};
}

Path cycle_normalized(const Parameters& q) {
  const int v = q.v(), k = q.k(), i = q.i();
  switch (girth(q).value()) {
    case 3:
      return triangle(q);
    case 4: {
      if (i >= 2 || v > 2 * k + 1) {
        const int w = k - i - 1;
        const VertexSet b1 = VertexSet::range(4, 4 + w);
        const VertexSet b2 = VertexSet::range(4 + w, 4 + 2 * w);
        const VertexSet c = VertexSet::range(4 + 2 * w, 4 + 2 * w + i);
        const VertexSet first = VertexSet{0} | b1 | c;
        return {first, VertexSet{1} | b2 | c, VertexSet{2} | b1 | c, VertexSet{3} | b2 | c, first};
      }
      // i = 1 and v in {2k, 2k+1}.
      const VertexSet b1 = VertexSet::range(4, k + 2);
      const VertexSet b2 = VertexSet::range(k + 2, 2 * k);
      const VertexSet first = VertexSet{0, 1} | b1;
      return {first, VertexSet{1, 2} | b2, VertexSet{2, 3} | b1, VertexSet{0, 3} | b2, first};
    }
    case 5:
      return odd_graph_walk(q);
    default:
      return odd_graph_hexagon(q);
  }
}

Path odd_walk_normalized(const Parameters& q) {
  const int g = girth(q).value();
  if (g == 3) return triangle(q);
  if (q.graph_class() == GraphClass::OddGraph) return odd_graph_walk(q);
  return girth_four_odd_walk(q);
}

// Runs a normalized construction on the complement triple when v < 2k.
class Frame {
 public:
  explicit Frame(const Parameters& p) : p_(p), q_(normalize(p)), flipped_(!p.is_normalized()) {}

  const Parameters& normalized() const noexcept { return q_; }

  VertexSet in(const VertexSet& s) const {
    require_vertex(p_, s);
    return flipped_ ? s.complement(p_.v()) : s;
  }
  VertexSet out(const VertexSet& s) const { return flipped_ ? s.complement(p_.v()) : s; }
  Path out(Path path) const {
    for (auto& s : path) s = out(s);
    return path;
  }

 private:
  Parameters p_;
  Parameters q_;
  bool flipped_;
};

}  // namespace

std::string_view to_string(WalkKind kind) noexcept {
  switch (kind) {
    case WalkKind::Path: return "path";
    case WalkKind::Cycle: return "cycle";
    case WalkKind::ClosedWalk: return "closed walk";
  }
  return "unknown";
}

VertexSet canonical_vertex(const Parameters& p) { return VertexSet::range(0, p.k()); }

VertexSet canonical_partner(const Parameters& p, int x) {
  if (x < p.min_intersection() || x > p.k()) {
    throw Error(ErrorCode::OutOfRange, "intersection size " + std::to_string(x) + " outside [" +
                                           std::to_string(p.min_intersection()) + "," + std::to_string(p.k()) +
                                           "] for " + p.to_string());
  }
  return VertexSet::range(0, x) | VertexSet::range(p.k(), 2 * p.k() - x);
}

VertexSet common_neighbor(const Parameters& p, const VertexSet& a, const VertexSet& b) {
  const Frame frame(p);
  return frame.out(neighbor_of_both(frame.normalized(), frame.in(a), frame.in(b)));
}

Walk geodesic(const Parameters& p, const VertexSet& a, const VertexSet& b) {
  const Frame frame(p);
  return make_walk(frame.out(shortest_path(frame.normalized(), frame.in(a), frame.in(b))), WalkKind::Path);
}

Walk shortest_cycle(const Parameters& p) {
  require_cycles(p);
  const Frame frame(p);
  return make_walk(frame.out(cycle_normalized(frame.normalized())), WalkKind::Cycle);
}

Walk odd_closed_walk(const Parameters& p) {
  require_cycles(p);
  const Frame frame(p);
  return make_walk(frame.out(odd_walk_normalized(frame.normalized())), WalkKind::ClosedWalk);
}

bool verify_walk(const Parameters& p, const Walk& w) {
  const auto& vs = w.vertices;
  if (vs.empty()) return false;
  if (w.claimed_length != static_cast<int>(vs.size()) - 1) return false;
  for (const auto& s : vs) {
    if (!is_vertex(p, s)) return false;
  }
  for (std::size_t j = 0; j + 1 < vs.size(); ++j) {
    if (vs[j] == vs[j + 1] || intersection_size(vs[j], vs[j + 1]) != p.i()) return false;
  }

  auto distinct = [](std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end());
    return std::adjacent_find(sets.begin(), sets.end()) == sets.end();
  };
  switch (w.kind) {
    case WalkKind::Path:
      return distinct(vs);
    case WalkKind::Cycle:
      return vs.size() >= 4 && vs.front() == vs.back() &&
             distinct(std::vector<VertexSet>(vs.begin(), vs.end() - 1));
    case WalkKind::ClosedWalk:
      return vs.front() == vs.back();
  }
  return false;
}

}  // namespace gjg
