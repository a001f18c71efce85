#include <gtest/gtest.h>

#include "gjg/error.hpp"
#include "gjg/params.hpp"

namespace gjg {
namespace {

GraphClass class_of(int v, int k, int i) { return make_parameters(v, k, i).graph_class(); }

TEST(MakeParameters, ClassifiesNamedFamilies) {
  EXPECT_EQ(class_of(5, 2, 0), GraphClass::OddGraph);
  EXPECT_EQ(class_of(7, 3, 0), GraphClass::OddGraph);
  EXPECT_EQ(class_of(6, 3, 0), GraphClass::Matching);
  EXPECT_EQ(class_of(8, 3, 0), GraphClass::KneserGraph);
  EXPECT_EQ(class_of(8, 3, 2), GraphClass::JohnsonGraph);
  EXPECT_EQ(class_of(10, 4, 2), GraphClass::Standard);
}

TEST(MakeParameters, DegenerateTriplesAreClassifiedNotRejected) {
  EXPECT_EQ(class_of(4, 2, 2), GraphClass::EmptyVertexSet);
  EXPECT_EQ(class_of(3, 3, 1), GraphClass::EmptyVertexSet);
  EXPECT_EQ(class_of(5, 3, 0), GraphClass::Edgeless);  // two 3-subsets of 5 share >= 1
  EXPECT_EQ(class_of(5, 4, 2), GraphClass::Edgeless);
  EXPECT_EQ(class_of(5, 3, 1), GraphClass::Standard);
}

TEST(MakeParameters, PrecedenceResolvesOverlaps) {
  // (3,1,0) is both an odd graph and a Kneser graph; (2,1,0) matching and Johnson.
  EXPECT_EQ(class_of(3, 1, 0), GraphClass::OddGraph);
  EXPECT_EQ(class_of(2, 1, 0), GraphClass::Matching);
  // Odd graph with i = k - 1 only when k = 1, covered above; Johnson beats Kneser.
  EXPECT_EQ(class_of(4, 1, 0), GraphClass::JohnsonGraph);
  // k = i wins over everything.
  EXPECT_EQ(class_of(2, 1, 1), GraphClass::EmptyVertexSet);
}

TEST(MakeParameters, RejectsBrokenOrder) {
  for (auto [v, k, i] : {std::tuple{3, 4, 0}, {5, 2, 3}, {5, 2, -1}, {-1, -1, -1}}) {
    try {
      make_parameters(v, k, i);
      FAIL() << v << "," << k << "," << i;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidOrder);
    }
  }
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(make_parameters(7, 4, 2)), make_parameters(7, 3, 1));
  EXPECT_EQ(normalize(make_parameters(10, 4, 2)), make_parameters(10, 4, 2));
  EXPECT_EQ(normalize(make_parameters(9, 5, 2)), make_parameters(9, 4, 1));
  EXPECT_EQ(normalize(make_parameters(7, 4, 1)).graph_class(), GraphClass::OddGraph);
}

TEST(Normalize, RejectsGraphsWithoutEdges) {
  for (auto [v, k, i] : {std::tuple{5, 3, 0}, {4, 2, 2}, {3, 3, 1}}) {
    try {
      normalize(make_parameters(v, k, i));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DegenerateClass);
    }
  }
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta(make_parameters(10, 4, 2)), 6);
  EXPECT_EQ(delta(make_parameters(8, 4, 1)), 2);
  for (int k = 1; k < 20; ++k) EXPECT_EQ(delta(make_parameters(2 * k + 1, k, 0)), 1);
}

// Every triple with v <= 40 that has edges.
template <class F>
void for_each_edged_triple(F&& f) {
  for (int v = 2; v <= 40; ++v)
    for (int k = 1; k < v; ++k)
      for (int i = 0; i < k; ++i) {
        const auto p = make_parameters(v, k, i);
        if (!is_degenerate(p.graph_class())) f(p);
      }
}

TEST(NormalizeProperty, IdempotentAndLandsInNormalizedCoordinates) {
  for_each_edged_triple([](const Parameters& p) {
    const Parameters q = normalize(p);
    EXPECT_EQ(normalize(q), q) << p;
    EXPECT_GE(q.v(), 2 * q.k()) << p;
    EXPECT_TRUE(q.is_normalized());
    if (q.graph_class() == GraphClass::Matching) EXPECT_EQ(p.graph_class(), GraphClass::Matching) << p;
    EXPECT_EQ(delta(q), delta(p)) << p;
  });
}

TEST(DeltaProperty, PositiveOnNormalizedStandardTriples) {
  for_each_edged_triple([](const Parameters& p) {
    if (!p.is_normalized() || p.graph_class() == GraphClass::Matching) return;
    EXPECT_GE(delta(p), 1) << p;
    EXPECT_EQ(delta(p) == 1, p.v() == 2 * p.k() + 1 && p.i() == 0) << p;
  });
}

}  // namespace
}  // namespace gjg
