#include "gjg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "gjg/combinadic.hpp"
#include "gjg/error.hpp"

namespace gjg {
namespace {

constexpr std::uint64_t low_bits(int count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

// BFS over bitset rows: each pop costs one masked pass over the row.
std::vector<int> bfs(const ExplicitGraph& g, std::size_t source) {
  const std::size_t n = g.vertex_count();
  const std::size_t words = g.words_per_row();
  std::vector<int> dist(n, -1);
  std::vector<std::uint64_t> unvisited(words, ~std::uint64_t{0});
  if (n % 64 != 0) unvisited.back() = low_bits(static_cast<int>(n % 64));
  std::vector<std::uint32_t> queue;
  queue.reserve(n);

  dist[source] = 0;
  unvisited[source / 64] &= ~(std::uint64_t{1} << (source % 64));
  queue.push_back(static_cast<std::uint32_t>(source));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    const int next = dist[u] + 1;
    const auto r = g.row(u);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t fresh = r[w] & unvisited[w];
      if (fresh == 0) continue;
      unvisited[w] &= ~fresh;
      while (fresh != 0) {
        const auto t = static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(fresh)));
        dist[t] = next;
        queue.push_back(t);
        fresh &= fresh - 1;
      }
    }
  }
  return dist;
}

std::vector<std::size_t> random_sources(const ExplicitGraph& g, int count, std::mt19937_64& rng) {
  std::vector<std::size_t> out;
  const std::size_t n = g.vertex_count();
  if (n <= 1) return out;
  std::uniform_int_distribution<std::size_t> pick(1, n - 1);
  for (int j = 0; j < count; ++j) out.push_back(pick(rng));
  return out;
}

std::mt19937_64 make_rng(const ExplicitGraph& g, const OracleOptions& options, std::uint64_t salt) {
  const auto& p = g.params();
  std::seed_seq seq{options.seed, salt, static_cast<std::uint64_t>(p.v()), static_cast<std::uint64_t>(p.k()),
                    static_cast<std::uint64_t>(p.i())};
  return std::mt19937_64(seq);
}

// A uniformly random vertex meeting `source` in exactly x elements.
std::uint64_t random_partner(const ExplicitGraph& g, std::uint64_t source, int x, std::mt19937_64& rng) {
  const int v = g.params().v();
  const int k = g.params().k();
  std::vector<int> inside, outside;
  for (int e = 0; e < v; ++e) ((source >> e) & 1U ? inside : outside).push_back(e);
  std::shuffle(inside.begin(), inside.end(), rng);
  std::shuffle(outside.begin(), outside.end(), rng);
  std::uint64_t mask = 0;
  for (int j = 0; j < x; ++j) mask |= std::uint64_t{1} << inside[static_cast<std::size_t>(j)];
  for (int j = 0; j < k - x; ++j) mask |= std::uint64_t{1} << outside[static_cast<std::size_t>(j)];
  return mask;
}

Quantity as_distance(int d) { return d < 0 ? Quantity::infinite() : Quantity::finite(d); }

Quantity eccentricity(std::span<const int> dist) {
  int ecc = 0;
  for (int d : dist) {
    if (d < 0) return Quantity::infinite();
    ecc = std::max(ecc, d);
  }
  return Quantity::finite(ecc);
}

[[noreturn]] void inconsistent(const ExplicitGraph& g, const std::string& what) {
  throw Error(ErrorCode::OracleInconsistency, g.params().to_string() + ": " + what);
}

void require_intersection(const ExplicitGraph& g, int x) {
  const auto& p = g.params();
  if (x < p.min_intersection() || x > p.k()) {
    throw Error(ErrorCode::OutOfRange, "intersection size " + std::to_string(x) + " outside [" +
                                           std::to_string(p.min_intersection()) + "," + std::to_string(p.k()) + "]");
  }
}

std::uint64_t canonical_partner_mask(const Parameters& p, int x) {
  return low_bits(x) | (low_bits(2 * p.k() - x) & ~low_bits(p.k()));
}

// Shared driver: the canonical BFS plus the sampled sources, with the
// per-x pair checks and the eccentricity cross-check.
struct DistanceSurvey {
  std::vector<int> canonical;
  Quantity diameter = Quantity::undefined();
};

DistanceSurvey survey_distances(const ExplicitGraph& g, const OracleOptions& options,
                                const std::vector<int>* only_x) {
  const auto& p = g.params();
  DistanceSurvey out;
  out.canonical = bfs(g, 0);
  if (options.on_bfs) options.on_bfs(0, out.canonical);
  out.diameter = eccentricity(out.canonical);

  std::vector<int> xs;
  if (only_x != nullptr) {
    xs = *only_x;
  } else {
    for (int x = p.min_intersection(); x <= p.k(); ++x) xs.push_back(x);
  }

  auto rng = make_rng(g, options, 1);
  for (std::size_t s : random_sources(g, options.sampled_sources, rng)) {
    const auto dist = bfs(g, s);
    if (options.on_bfs) options.on_bfs(s, dist);
    if (eccentricity(dist) != out.diameter) {
      inconsistent(g, "eccentricity of vertex " + std::to_string(s) + " differs from vertex 0");
    }
    for (int x : xs) {
      const std::size_t t = g.index_of(random_partner(g, g.vertex_mask(s), x, rng));
      const std::size_t c = g.index_of(canonical_partner_mask(p, x));
      if (dist[t] != out.canonical[c]) {
        inconsistent(g, "pair (" + std::to_string(s) + "," + std::to_string(t) + ") with intersection " +
                            std::to_string(x) + " has distance " + std::to_string(dist[t]) +
                            ", canonical pair has " + std::to_string(out.canonical[c]));
      }
    }
  }
  return out;
}

Quantity checked_local(const ExplicitGraph& g, const OracleOptions& options, std::uint64_t salt,
                       Quantity (*measure)(const ExplicitGraph&, std::size_t), const char* name) {
  const Quantity base = measure(g, 0);
  auto rng = make_rng(g, options, salt);
  for (std::size_t s : random_sources(g, options.girth_sources, rng)) {
    if (measure(g, s) != base) {
      inconsistent(g, std::string(name) + " from vertex " + std::to_string(s) + " differs from vertex 0");
    }
  }
  return base;
}

}  // namespace

std::vector<std::uint32_t> ExplicitGraph::neighbors(std::size_t u) const {
  std::vector<std::uint32_t> out;
  for_each_neighbor(u, [&](std::size_t w) { out.push_back(static_cast<std::uint32_t>(w)); });
  return out;
}

std::size_t ExplicitGraph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::uint64_t word : row(u)) d += static_cast<std::size_t>(std::popcount(word));
  return d;
}

std::size_t ExplicitGraph::edge_count() const {
  std::size_t twice = 0;
  for (std::uint64_t word : bits_) twice += static_cast<std::size_t>(std::popcount(word));
  return twice / 2;
}

std::size_t ExplicitGraph::index_of(std::uint64_t mask) const {
  return static_cast<std::size_t>(rank_mask(mask));
}

ExplicitGraph build_graph(const Parameters& p, std::uint64_t vertex_budget) {
  if (p.v() > 64) {
    throw Error(ErrorCode::Unsupported, "explicit graphs need v <= 64, got " + p.to_string());
  }
  const std::uint64_t n = binomial(p.v(), p.k());
  if (n > vertex_budget) {
    throw Error(ErrorCode::BudgetExceeded, p.to_string() + " has " + std::to_string(n) +
                                               " vertices, budget is " + std::to_string(vertex_budget));
  }

  ExplicitGraph g(p);
  g.masks_.reserve(n);
  std::uint64_t mask = low_bits(p.k());
  for (std::uint64_t r = 0; r < n; ++r) {
    g.masks_.push_back(mask);
    if (r + 1 < n) mask = next_colex_mask(mask);
  }

  g.words_ = (n + 63) / 64;
  g.bits_.assign(n * g.words_, 0);
  const int i = p.i();
  for (std::size_t a = 0; a < n; ++a) {
    const std::uint64_t ma = g.masks_[a];
    std::uint64_t* row_a = g.bits_.data() + a * g.words_;
    for (std::size_t b = a + 1; b < n; ++b) {
      if (std::popcount(ma & g.masks_[b]) == i) {
        row_a[b / 64] |= std::uint64_t{1} << (b % 64);
        g.bits_[b * g.words_ + a / 64] |= std::uint64_t{1} << (a % 64);
      }
    }
  }
  return g;
}

std::vector<int> bfs_distances(const ExplicitGraph& g, std::size_t source) {
  if (source >= g.vertex_count()) throw Error(ErrorCode::OutOfRange, "source " + std::to_string(source));
  return bfs(g, source);
}

Quantity local_girth(const ExplicitGraph& g, std::size_t source) {
  const std::size_t n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::vector<std::int64_t> parent(n, -1);
  std::vector<std::uint32_t> queue;
  int best = -1;

  dist[source] = 0;
  queue.push_back(static_cast<std::uint32_t>(source));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    // Edges out of u close cycles of length >= 2 dist[u] + 1.
    if (best >= 0 && 2 * dist[u] + 1 >= best) break;
    g.for_each_neighbor(u, [&](std::size_t w) {
      if (static_cast<std::int64_t>(w) == parent[u]) return;
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(static_cast<std::uint32_t>(w));
      } else {
        const int len = dist[u] + dist[w] + 1;
        if (best < 0 || len < best) best = len;
      }
    });
  }
  return best < 0 ? Quantity::undefined() : Quantity::finite(best);
}

Quantity local_odd_girth(const ExplicitGraph& g, std::size_t source) {
  const std::size_t n = g.vertex_count();
  const std::size_t words = g.words_per_row();
  // State (u, parity) of the double cover, stored at u + parity * n.
  std::vector<int> dist(2 * n, -1);
  std::vector<std::uint64_t> unvisited[2] = {std::vector<std::uint64_t>(words, ~std::uint64_t{0}),
                                             std::vector<std::uint64_t>(words, ~std::uint64_t{0})};
  if (n % 64 != 0) {
    unvisited[0].back() = unvisited[1].back() = low_bits(static_cast<int>(n % 64));
  }
  std::vector<std::uint32_t> queue;
  dist[source] = 0;
  unvisited[0][source / 64] &= ~(std::uint64_t{1} << (source % 64));
  queue.push_back(static_cast<std::uint32_t>(source));
  const std::size_t target = source + n;

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t state = queue[head];
    const std::size_t u = state % n;
    const std::size_t flip = state < n ? 1 : 0;
    const int next = dist[state] + 1;
    auto& seen = unvisited[flip];
    const auto r = g.row(u);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t fresh = r[w] & seen[w];
      if (fresh == 0) continue;
      seen[w] &= ~fresh;
      while (fresh != 0) {
        const std::size_t t = w * 64 + static_cast<std::size_t>(std::countr_zero(fresh)) + flip * n;
        dist[t] = next;
        if (t == target) return Quantity::finite(next);
        queue.push_back(static_cast<std::uint32_t>(t));
        fresh &= fresh - 1;
      }
    }
  }
  return Quantity::undefined();
}

Quantity oracle_distance(const ExplicitGraph& g, int x, const OracleOptions& options) {
  require_intersection(g, x);
  const std::vector<int> only{x};
  const auto survey = survey_distances(g, options, &only);
  return as_distance(survey.canonical[g.index_of(canonical_partner_mask(g.params(), x))]);
}

Quantity oracle_girth(const ExplicitGraph& g, const OracleOptions& options) {
  return checked_local(g, options, 2, &local_girth, "local girth");
}

Quantity oracle_odd_girth(const ExplicitGraph& g, const OracleOptions& options) {
  return checked_local(g, options, 3, &local_odd_girth, "local odd girth");
}

Quantity oracle_diameter(const ExplicitGraph& g, const OracleOptions& options) {
  const std::vector<int> none;
  return survey_distances(g, options, &none).diameter;
}

OracleReport oracle_report(const ExplicitGraph& g, const OracleOptions& options) {
  const auto& p = g.params();
  const auto survey = survey_distances(g, options, nullptr);
  OracleReport report{p,
                      delta(p),
                      oracle_girth(g, options),
                      oracle_odd_girth(g, options),
                      survey.diameter,
                      {},
                      !survey.diameter.is_infinite()};
  for (int x = p.min_intersection(); x <= p.k(); ++x) {
    report.distance_profile.emplace(x, as_distance(survey.canonical[g.index_of(canonical_partner_mask(p, x))]));
  }
  return report;
}

OracleReport oracle_report(const Parameters& p, std::uint64_t vertex_budget, const OracleOptions& options) {
  return oracle_report(build_graph(p, vertex_budget), options);
}

bool complement_isomorphic(const ExplicitGraph& g, const ExplicitGraph& h) {
  const auto& p = g.params();
  const auto& q = h.params();
  if (q.v() != p.v() || q.k() != p.v() - p.k() || q.i() != p.v() - 2 * p.k() + p.i()) return false;
  if (g.vertex_count() != h.vertex_count()) return false;
  const std::uint64_t ground = low_bits(p.v());
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> image(n);
  for (std::size_t u = 0; u < n; ++u) image[u] = h.index_of(~g.vertex_mask(u) & ground);
  for (std::size_t u = 0; u < n; ++u) {
    if (g.degree(u) != h.degree(image[u])) return false;
    bool ok = true;
    g.for_each_neighbor(u, [&](std::size_t w) { ok = ok && h.adjacent(image[u], image[w]); });
    if (!ok) return false;
  }
  return true;
}

}  // namespace gjg
