#include "gjg/params.hpp"

#include "gjg/error.hpp"

namespace gjg {

std::string_view to_string(GraphClass c) noexcept {
  switch (c) {
    case GraphClass::Standard: return "Standard";
    case GraphClass::OddGraph: return "OddGraph";
    case GraphClass::KneserGraph: return "KneserGraph";
    case GraphClass::JohnsonGraph: return "JohnsonGraph";
    case GraphClass::Matching: return "Matching";
    case GraphClass::Edgeless: return "Edgeless";
    case GraphClass::EmptyVertexSet: return "EmptyVertexSet";
  }
  return "Unknown";
}

bool is_standard(GraphClass c) noexcept {
  return c == GraphClass::Standard || c == GraphClass::OddGraph ||
         c == GraphClass::KneserGraph || c == GraphClass::JohnsonGraph;
}

bool is_degenerate(GraphClass c) noexcept {
  return c == GraphClass::Edgeless || c == GraphClass::EmptyVertexSet;
}

GraphClass classify(int v, int k, int i) {
  if (k == i || v == k) return GraphClass::EmptyVertexSet;
  if (v < 2 * k && i < 2 * k - v) return GraphClass::Edgeless;
  if (v == 2 * k && i == 0) return GraphClass::Matching;
  if (v == 2 * k + 1 && i == 0) return GraphClass::OddGraph;
  if (i == k - 1) return GraphClass::JohnsonGraph;
  if (i == 0) return GraphClass::KneserGraph;
  return GraphClass::Standard;
}

Parameters Parameters::make(int v, int k, int i) {
  if (i < 0 || k < i || v < k) {
    throw Error(ErrorCode::InvalidOrder,
                "need v >= k >= i >= 0, got (" + std::to_string(v) + "," + std::to_string(k) + "," +
                    std::to_string(i) + ")");
  }
  return Parameters(v, k, i, classify(v, k, i));
}

std::string Parameters::to_string() const {
  return "J(" + std::to_string(v_) + "," + std::to_string(k_) + "," + std::to_string(i_) + ")";
}

std::ostream& operator<<(std::ostream& os, const Parameters& p) { return os << p.to_string(); }

Parameters make_parameters(int v, int k, int i) { return Parameters::make(v, k, i); }

Parameters normalize(const Parameters& p) {
  if (is_degenerate(p.graph_class())) {
    throw Error(ErrorCode::DegenerateClass,
                p.to_string() + " is " + std::string(to_string(p.graph_class())));
  }
  if (p.is_normalized()) return p;
  return Parameters::make(p.v(), p.v() - p.k(), p.v() - 2 * p.k() + p.i());
}

int delta(const Parameters& p) noexcept { return p.v() - 2 * p.k() + 2 * p.i(); }

}  // namespace gjg
