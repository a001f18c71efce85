#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gjg/error.hpp"
#include "gjg/formulas.hpp"
#include "gjg/witness.hpp"

namespace gjg {
namespace {

Parameters P(int v, int k, int i) { return make_parameters(v, k, i); }

template <class F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// Standard-class triples, both sides of v = 2k.
template <class F>
void for_each_standard(int v_max, F&& f) {
  for (int v = 2; v <= v_max; ++v)
    for (int k = 1; k < v; ++k)
      for (int i = 0; i < k; ++i) {
        const auto p = P(v, k, i);
        if (is_standard(p.graph_class())) f(p);
      }
}

VertexSet random_vertex(const Parameters& p, std::mt19937_64& rng) {
  std::vector<int> ground(static_cast<std::size_t>(p.v()));
  std::iota(ground.begin(), ground.end(), 0);
  std::shuffle(ground.begin(), ground.end(), rng);
  ground.resize(static_cast<std::size_t>(p.k()));
  return VertexSet(ground);
}

TEST(CanonicalPartner, MeetsCanonicalVertexInX) {
  const auto p = P(10, 4, 2);
  EXPECT_EQ(canonical_vertex(p), VertexSet({0, 1, 2, 3}));
  EXPECT_EQ(canonical_partner(p, 0), VertexSet({4, 5, 6, 7}));
  EXPECT_EQ(canonical_partner(p, 3), VertexSet({0, 1, 2, 4}));
  EXPECT_EQ(canonical_partner(P(7, 4, 2), 1), VertexSet({0, 4, 5, 6}));
  expect_error(ErrorCode::OutOfRange, [&] { canonical_partner(P(7, 4, 2), 0); });
  expect_error(ErrorCode::OutOfRange, [&] { canonical_partner(p, 5); });
}

TEST(CommonNeighbor, Examples) {
  const auto p = P(10, 4, 2);
  EXPECT_EQ(common_neighbor(p, {0, 1, 2, 3}, {4, 5, 6, 7}), VertexSet({0, 1, 4, 5}));
  const VertexSet a{0, 1, 2, 3};
  const auto c = common_neighbor(p, a, a);
  EXPECT_EQ(intersection_size(a, c), 2);
  expect_error(ErrorCode::NoCommonNeighbor, [] { common_neighbor(P(5, 2, 0), {0, 1}, {2, 3}); });
  expect_error(ErrorCode::InvalidSet, [&] { common_neighbor(p, {0, 1, 2}, a); });
}

TEST(CommonNeighborProperty, ExistsExactlyWhenPredicted) {
  for_each_standard(16, [](const Parameters& p) {
    const auto a = canonical_vertex(p);
    for (int x = p.min_intersection(); x <= p.k(); ++x) {
      const auto b = canonical_partner(p, x);
      const auto q = normalize(p);
      const int xq = p.is_normalized() ? x : x + p.v() - 2 * p.k();
      if (has_common_neighbor(q, xq)) {
        const auto c = common_neighbor(p, a, b);
        EXPECT_TRUE(is_vertex(p, c)) << p;
        EXPECT_EQ(intersection_size(a, c), p.i()) << p << " x=" << x;
        EXPECT_EQ(intersection_size(b, c), p.i()) << p << " x=" << x;
      } else {
        expect_error(ErrorCode::NoCommonNeighbor, [&] { common_neighbor(p, a, b); });
      }
    }
  });
}

TEST(Geodesic, TrivialCases) {
  const auto p = P(10, 4, 2);
  const VertexSet a{0, 1, 2, 3}, b{0, 1, 4, 5};
  const auto self = geodesic(p, a, a);
  EXPECT_EQ(self.claimed_length, 0);
  EXPECT_EQ(self.vertices, std::vector<VertexSet>{a});
  const auto edge = geodesic(p, a, b);
  EXPECT_EQ(edge.claimed_length, 1);
  EXPECT_EQ(edge.vertices, (std::vector<VertexSet>{a, b}));
  EXPECT_EQ(edge.kind, WalkKind::Path);
}

TEST(Geodesic, Example) {
  const auto p = P(8, 4, 1);
  const auto w = geodesic(p, {0, 1, 2, 3}, {4, 5, 6, 7});
  EXPECT_EQ(w.claimed_length, 3);
  EXPECT_TRUE(verify_walk(p, w));
  EXPECT_EQ(w.vertices.front(), VertexSet({0, 1, 2, 3}));
  EXPECT_EQ(w.vertices.back(), VertexSet({4, 5, 6, 7}));
}

TEST(Geodesic, Errors) {
  expect_error(ErrorCode::Disconnected, [] { geodesic(P(6, 3, 0), {0, 1, 2}, {0, 1, 3}); });
  EXPECT_EQ(geodesic(P(6, 3, 0), {0, 1, 2}, {3, 4, 5}).claimed_length, 1);
  expect_error(ErrorCode::DegenerateClass, [] { geodesic(P(5, 3, 0), {0, 1, 2}, {2, 3, 4}); });
  expect_error(ErrorCode::InvalidSet, [] { geodesic(P(10, 4, 2), {0, 1, 2, 3}, {0, 1, 2, 10}); });
}

TEST(GeodesicProperty, CanonicalPairsMatchFormula) {
  for_each_standard(22, [](const Parameters& p) {
    const auto a = canonical_vertex(p);
    const auto profile = invariant_report(p).distance_profile;
    for (const auto& [x, d] : profile) {
      const auto b = canonical_partner(p, x);
      const auto w = geodesic(p, a, b);
      ASSERT_TRUE(verify_walk(p, w)) << p << " x=" << x;
      EXPECT_EQ(w.vertices.front(), a);
      EXPECT_EQ(w.vertices.back(), b);
      EXPECT_EQ(Quantity::finite(w.claimed_length), d) << p << " x=" << x;
    }
  });
}

TEST(GeodesicProperty, RandomPairsMatchFormula) {
  std::mt19937_64 rng(2024);
  for_each_standard(30, [&](const Parameters& p) {
    const auto profile = invariant_report(p).distance_profile;
    for (int trial = 0; trial < 4; ++trial) {
      const auto a = random_vertex(p, rng);
      const auto b = random_vertex(p, rng);
      const auto w = geodesic(p, a, b);
      ASSERT_TRUE(verify_walk(p, w)) << p << " " << a << " " << b;
      EXPECT_EQ(w.vertices.front(), a);
      EXPECT_EQ(w.vertices.back(), b);
      EXPECT_EQ(Quantity::finite(w.claimed_length), profile.at(intersection_size(a, b))) << p;
    }
  });
}

TEST(ShortestCycle, Examples) {
  const auto triangle = shortest_cycle(P(6, 2, 0));
  EXPECT_EQ(triangle.claimed_length, 3);
  EXPECT_TRUE(verify_walk(P(6, 2, 0), triangle));

  const auto square = shortest_cycle(P(8, 4, 1));
  EXPECT_EQ(square.claimed_length, 4);
  EXPECT_TRUE(verify_walk(P(8, 4, 1), square));

  const auto pentagon = shortest_cycle(P(5, 2, 0));
  EXPECT_EQ(pentagon.claimed_length, 5);
  EXPECT_TRUE(verify_walk(P(5, 2, 0), pentagon));

  for (const auto& p : {P(7, 3, 0), P(9, 4, 0), P(11, 5, 0)}) {
    const auto hexagon = shortest_cycle(p);
    EXPECT_EQ(hexagon.claimed_length, 6) << p;
    EXPECT_TRUE(verify_walk(p, hexagon)) << p;
  }
}

TEST(ShortestCycle, HandWrittenPentagonVerifies) {
  Walk w{{{0, 1}, {2, 3}, {0, 4}, {1, 2}, {3, 4}, {0, 1}}, WalkKind::Cycle, 5};
  EXPECT_TRUE(verify_walk(P(5, 2, 0), w));
}

TEST(ShortestCycle, RejectsGraphsWithoutCycles) {
  expect_error(ErrorCode::DegenerateClass, [] { shortest_cycle(P(6, 3, 0)); });
  expect_error(ErrorCode::DegenerateClass, [] { shortest_cycle(P(5, 3, 0)); });
  expect_error(ErrorCode::DegenerateClass, [] { odd_closed_walk(P(4, 2, 2)); });
}

TEST(ShortestCycleProperty, LengthIsGirth) {
  for_each_standard(40, [](const Parameters& p) {
    const auto w = shortest_cycle(p);
    EXPECT_TRUE(verify_walk(p, w)) << p;
    EXPECT_EQ(w.kind, WalkKind::Cycle);
    EXPECT_EQ(Quantity::finite(w.claimed_length), girth(p)) << p;
  });
}

TEST(OddClosedWalk, Examples) {
  const auto p = P(7, 3, 0);
  const auto w = odd_closed_walk(p);
  EXPECT_EQ(w.claimed_length, 7);
  EXPECT_TRUE(verify_walk(p, w));
  for (const VertexSet s : {VertexSet{0, 1, 2}, VertexSet{2, 3, 4}, VertexSet{4, 5, 6}}) {
    EXPECT_NE(std::find(w.vertices.begin(), w.vertices.end(), s), w.vertices.end()) << s;
  }
  EXPECT_EQ(odd_closed_walk(P(6, 2, 0)).claimed_length, 3);
  EXPECT_EQ(odd_closed_walk(P(8, 4, 1)).claimed_length, 5);
  EXPECT_TRUE(verify_walk(P(8, 4, 1), odd_closed_walk(P(8, 4, 1))));
}

TEST(OddClosedWalkProperty, LengthIsOddGirth) {
  for_each_standard(40, [](const Parameters& p) {
    const auto w = odd_closed_walk(p);
    EXPECT_TRUE(verify_walk(p, w)) << p;
    EXPECT_EQ(w.kind, WalkKind::ClosedWalk);
    EXPECT_EQ(Quantity::finite(w.claimed_length), odd_girth(p)) << p;
  });
}

// In the girth-4 construction the walk runs A -> C -> B -> A with C at
// distance r = ceil((k-i)/delta) from both A and B.
TEST(OddClosedWalkProperty, GirthFourMidpointIsAtDistanceR) {
  int covered = 0;
  for_each_standard(40, [&](const Parameters& p) {
    if (!p.is_normalized() || girth(p) != Quantity::finite(4)) return;
    const int r = ceil_div(p.k() - p.i(), delta(p));
    const auto w = odd_closed_walk(p);
    ASSERT_EQ(w.claimed_length, 2 * r + 1) << p;
    const auto& a = w.vertices.front();
    const auto& c = w.vertices[static_cast<std::size_t>(r)];
    const auto& b = w.vertices[static_cast<std::size_t>(2 * r)];
    EXPECT_EQ(intersection_size(a, b), p.i()) << p;
    EXPECT_EQ(distance_by_intersection(p, intersection_size(a, c)), Quantity::finite(r)) << p;
    EXPECT_EQ(distance_by_intersection(p, intersection_size(b, c)), Quantity::finite(r)) << p;
    ++covered;
  });
  EXPECT_GT(covered, 100);
}

TEST(WitnessProperty, Deterministic) {
  for_each_standard(14, [](const Parameters& p) {
    EXPECT_EQ(shortest_cycle(p).vertices, shortest_cycle(p).vertices);
    EXPECT_EQ(odd_closed_walk(p).vertices, odd_closed_walk(p).vertices);
    const auto a = canonical_vertex(p);
    const auto b = canonical_partner(p, p.min_intersection());
    EXPECT_EQ(geodesic(p, a, b).vertices, geodesic(p, a, b).vertices);
  });
}

TEST(VerifyWalk, RejectsBrokenWalks) {
  const auto p = P(5, 2, 0);
  EXPECT_TRUE(verify_walk(p, {{{0, 1}}, WalkKind::Path, 0}));
  EXPECT_FALSE(verify_walk(p, {{}, WalkKind::Path, 0}));
  EXPECT_FALSE(verify_walk(p, {{{0, 1}, {1, 2}}, WalkKind::Path, 1}));      // not adjacent
  EXPECT_FALSE(verify_walk(p, {{{0, 1}, {2, 3}}, WalkKind::Path, 2}));      // wrong length
  EXPECT_FALSE(verify_walk(p, {{{0, 1}, {2, 5}}, WalkKind::Path, 1}));      // not a vertex
  EXPECT_FALSE(verify_walk(p, {{{0, 1}, {2, 3}, {0, 1}}, WalkKind::Path, 2}));  // repeats
  EXPECT_TRUE(verify_walk(p, {{{0, 1}, {2, 3}, {0, 1}}, WalkKind::ClosedWalk, 2}));
  EXPECT_FALSE(verify_walk(p, {{{0, 1}, {2, 3}, {0, 1}}, WalkKind::Cycle, 2}));  // too short
  EXPECT_FALSE(verify_walk(p, {{{0, 1}, {2, 3}, {0, 4}}, WalkKind::ClosedWalk, 2}));  // open
}

}  // namespace
}  // namespace gjg
