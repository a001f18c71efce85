#include "gjg/formulas.hpp"

#include <algorithm>
#include <string>

#include "gjg/combinadic.hpp"
#include "gjg/error.hpp"

namespace gjg {
namespace {

void require_normalized(const Parameters& p) {
  if (!p.is_normalized()) {
    throw Error(ErrorCode::NotNormalized, p.to_string() + " has v < 2k; normalize first");
  }
}

void require_edges(const Parameters& p) {
  if (is_degenerate(p.graph_class())) {
    throw Error(ErrorCode::DegenerateClass,
                p.to_string() + " is " + std::string(to_string(p.graph_class())));
  }
}

void require_intersection(const Parameters& p, int x) {
  if (x < p.min_intersection() || x > p.k()) {
    throw Error(ErrorCode::OutOfRange, "intersection size " + std::to_string(x) + " outside [" +
                                           std::to_string(p.min_intersection()) + "," + std::to_string(p.k()) +
                                           "] for " + p.to_string());
  }
}

}  // namespace

int ceil_div(int a, int b) {
  if (a < 0 || b <= 0) {
    throw Error(ErrorCode::OutOfRange, "ceil_div(" + std::to_string(a) + "," + std::to_string(b) + ")");
  }
  return (a + b - 1) / b;
}

bool has_common_neighbor(const Parameters& p, int x) {
  require_edges(p);
  require_normalized(p);
  require_intersection(p, x);
  const int k = p.k();
  return x >= std::max(k - delta(p), 2 * p.i() - k);
}

Quantity girth(const Parameters& p) {
  if (is_degenerate(p.graph_class()) || p.graph_class() == GraphClass::Matching) {
    return Quantity::undefined();
  }
  const Parameters q = normalize(p);
  const int v = q.v(), k = q.k(), i = q.i();
  if (v >= 3 * (k - i)) return Quantity::finite(3);
  if (v == 2 * k + 1 && i == 0) return Quantity::finite(k == 2 ? 5 : 6);
  return Quantity::finite(4);
}

Quantity odd_girth(const Parameters& p) {
  if (is_degenerate(p.graph_class()) || p.graph_class() == GraphClass::Matching) {
    return Quantity::undefined();
  }
  const Parameters q = normalize(p);
  return Quantity::finite(2 * ceil_div(q.k() - q.i(), delta(q)) + 1);
}

int parity_bounded_distance(const Parameters& p, int x) {
  const int d = delta(p);
  return std::min(2 * ceil_div(p.k() - x, d), 2 * ceil_div(x - p.i(), d) + 1);
}

Quantity distance_by_intersection(const Parameters& p, int x) {
  require_edges(p);
  require_normalized(p);
  require_intersection(p, x);
  const int k = p.k(), i = p.i();
  if (p.graph_class() == GraphClass::Matching) {
    if (x == k) return Quantity::finite(0);
    if (x == 0) return Quantity::finite(1);
    return Quantity::infinite();
  }
  const int d = delta(p);
  if (x < std::min(i, k - d)) return Quantity::finite(3);
  if (x < i) return Quantity::finite(ceil_div(k - x, k - i));
  return Quantity::finite(parity_bounded_distance(p, x));
}

Quantity diameter(const Parameters& p) {
  require_edges(p);
  if (p.graph_class() == GraphClass::Matching) {
    // C(2k,k)/2 disjoint edges: one edge when k = 1.
    return p.k() == 1 ? Quantity::finite(1) : Quantity::infinite();
  }
  const Parameters q = normalize(p);
  const int v = q.v(), k = q.k(), i = q.i();
  if (v < 3 * (k - i) - 1 || i == 0) return Quantity::finite(ceil_div(k - i - 1, delta(q)) + 1);
  if (v < 3 * k - 2 * i) return Quantity::finite(3);
  return Quantity::finite(ceil_div(k, k - i));
}

int max_f(const Parameters& p) {
  require_edges(p);
  require_normalized(p);
  if (p.graph_class() == GraphClass::Matching) {
    throw Error(ErrorCode::DegenerateClass, p.to_string() + " is Matching");
  }
  if (p.k() <= p.i() + 1) {
    throw Error(ErrorCode::Unsupported, "max_f needs k > i + 1, got " + p.to_string());
  }
  return ceil_div(p.k() - p.i() - 1, delta(p)) + 1;
}

InvariantReport invariant_report(const Parameters& p) {
  InvariantReport report{p, delta(p), Quantity::undefined(), Quantity::undefined(), Quantity::undefined(), {}};
  const int lo = p.min_intersection();

  if (is_degenerate(p.graph_class())) {
    // No edges: a single vertex has diameter 0, anything larger is disconnected.
    report.diameter = binomial(p.v(), p.k()) == 1 ? Quantity::finite(0) : Quantity::infinite();
    for (int x = lo; x <= p.k(); ++x) {
      report.distance_profile.emplace(x, x == p.k() ? Quantity::finite(0) : Quantity::infinite());
    }
    return report;
  }

  const Parameters q = normalize(p);
  report.girth = girth(q);
  report.odd_girth = odd_girth(q);
  report.diameter = diameter(q);
  // Complementing both vertices maps |A ∩ B| = x to x + v - 2k.
  const int shift = p.v() - 2 * p.k();
  for (int xq = q.min_intersection(); xq <= q.k(); ++xq) {
    const int x = p.is_normalized() ? xq : xq - shift;
    report.distance_profile.emplace(x, distance_by_intersection(q, xq));
  }
  return report;
}

}  // namespace gjg
