#include "gjg/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <random>
#include <sstream>
#include <streambuf>
#include <thread>

#include "gjg/combinadic.hpp"
#include "gjg/error.hpp"
#include "gjg/formulas.hpp"
#include "gjg/graphio.hpp"
#include "gjg/witness.hpp"

namespace gjg {
namespace {

// Graphs with more edges than this skip the export line-count check.
constexpr std::size_t kExportCheckEdgeLimit = 200000;

// Counts newlines written to it and discards everything.
class LineCounter : public std::streambuf {
 public:
  std::size_t lines() const noexcept { return lines_; }

 protected:
  int_type overflow(int_type ch) override {
    if (ch == '\n') ++lines_;
    return ch;
  }
  std::streamsize xsputn(const char* s, std::streamsize n) override {
    lines_ += static_cast<std::size_t>(std::count(s, s + n, '\n'));
    return n;
  }

 private:
  std::size_t lines_ = 0;
};

// ceil(a / b) for any sign of a, b > 0. Kept separate from the formulas
// module: the lower-bound lemma has negative numerators.
int ceil_div_signed(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

class Recorder {
 public:
  explicit Recorder(TripleOutcome& out) : out_(out) {}

  template <class Describe>
  bool check(Criterion c, bool ok, Describe&& describe) {
    auto& t = out_.tallies[static_cast<std::size_t>(c)];
    ++t.checks;
    if (!ok) {
      ++t.failures;
      out_.failures.push_back(std::string(to_string(c)) + ": " + describe());
    }
    return ok;
  }

  void bulk(Criterion c, std::uint64_t checks, std::uint64_t failures, const std::string& first_failure) {
    auto& t = out_.tallies[static_cast<std::size_t>(c)];
    t.checks += checks;
    t.failures += failures;
    if (failures != 0) out_.failures.push_back(std::string(to_string(c)) + ": " + first_failure);
  }

 private:
  TripleOutcome& out_;
};

std::string show(const Quantity& q) { return q.to_string(); }

void check_structure(const Parameters& p, const ExplicitGraph& g, Recorder& rec) {
  const std::size_t n = g.vertex_count();
  const std::uint64_t expected_degree =
      p.k() == p.i() ? 0 : binomial(p.k(), p.i()) * binomial(p.v() - p.k(), p.k() - p.i());

  std::uint64_t bad_degree = 0, bad_symmetry = 0, bad_rank = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (g.degree(u) != expected_degree) ++bad_degree;
    if (g.adjacent(u, u)) ++bad_symmetry;
    g.for_each_neighbor(u, [&](std::size_t w) {
      if (!g.adjacent(w, u)) ++bad_symmetry;
    });
    const VertexSet s = unrank(p, Rank{u});
    if (rank(p, s).value != u || s.to_mask() != g.vertex_mask(u)) ++bad_rank;
  }
  rec.bulk(Criterion::Structure, n, bad_degree, "degree differs from C(k,i)C(v-k,k-i)");
  rec.bulk(Criterion::Structure, n, bad_symmetry, "adjacency not symmetric/irreflexive");
  rec.bulk(Criterion::Structure, n, bad_rank, "rank/unrank round trip or colex vertex order broken");

  if (g.edge_count() <= kExportCheckEdgeLimit) {
    LineCounter edges, dimacs;
    std::ostream eo(&edges), dout(&dimacs);
    export_graph(g, GraphFormat::EdgeList, eo);
    export_graph(g, GraphFormat::Dimacs, dout);
    const std::size_t m = g.edge_count();
    rec.check(Criterion::Structure, edges.lines() == m && dimacs.lines() == m + 1 && 2 * m == n * expected_degree,
              [&] { return "export line counts " + std::to_string(edges.lines()) + "/" +
                           std::to_string(dimacs.lines()) + " for " + std::to_string(m) + " edges"; });
  }
}

void compare_reports(const InvariantReport& formula, const OracleReport& oracle, Recorder& rec) {
  rec.check(Criterion::Girth, formula.girth == oracle.girth,
            [&] { return "formula " + show(formula.girth) + ", oracle " + show(oracle.girth); });
  rec.check(Criterion::OddGirth, formula.odd_girth == oracle.odd_girth,
            [&] { return "formula " + show(formula.odd_girth) + ", oracle " + show(oracle.odd_girth); });
  rec.check(Criterion::Diameter, formula.diameter == oracle.diameter,
            [&] { return "formula " + show(formula.diameter) + ", oracle " + show(oracle.diameter); });
  for (const auto& [x, d] : oracle.distance_profile) {
    const auto it = formula.distance_profile.find(x);
    const bool ok = it != formula.distance_profile.end() && it->second == d;
    rec.check(Criterion::Distance, ok, [&, x = x, d = d] {
      return "x=" + std::to_string(x) + ": formula " +
             (it == formula.distance_profile.end() ? std::string("missing") : show(it->second)) + ", oracle " +
             show(d);
    });
  }
  rec.check(Criterion::Distance, formula.distance_profile.size() == oracle.distance_profile.size(),
            [] { return std::string("profile domains differ"); });
}

// Lower-bound lemma and per-pair geodesic soundness on every BFS tree.
class BfsAudit {
 public:
  BfsAudit(const Parameters& p, const ExplicitGraph& g, std::uint64_t seed)
      : p_(p), g_(g), delta_(delta(p)), rng_(seed) {}

  void operator()(std::size_t source, std::span<const int> dist) {
    const std::uint64_t ms = g_.vertex_mask(source);
    const std::size_t n = g_.vertex_count();
    for (std::size_t t = 0; t < n; ++t) {
      const int d = dist[t];
      if (d < 0) continue;
      ++lemma_checks_;
      const int x = std::popcount(ms & g_.vertex_mask(t));
      const int half = d / 2;
      const int bound = d % 2 == 0 ? ceil_div_signed(p_.k() - x, delta_) : ceil_div_signed(x - p_.i(), delta_);
      if (half < bound) {
        if (lemma_failures_++ == 0) {
          lemma_first_ = "vertices " + std::to_string(source) + "," + std::to_string(t) + " at distance " +
                         std::to_string(d) + " with x=" + std::to_string(x);
        }
      }
    }

    // One target per intersection size, scanning from a random offset.
    const int lo = p_.min_intersection();
    std::vector<std::int64_t> pick(static_cast<std::size_t>(p_.k() - lo + 1), -1);
    const std::size_t start = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
    std::size_t found = 0;
    for (std::size_t step = 0; step < n && found < pick.size(); ++step) {
      const std::size_t t = (start + step) % n;
      auto& slot = pick[static_cast<std::size_t>(std::popcount(ms & g_.vertex_mask(t)) - lo)];
      if (slot < 0) {
        slot = static_cast<std::int64_t>(t);
        ++found;
      }
    }
    const VertexSet a = VertexSet::from_mask(ms);
    for (std::int64_t t : pick) {
      if (t < 0) continue;
      ++walk_checks_;
      const VertexSet b = VertexSet::from_mask(g_.vertex_mask(static_cast<std::size_t>(t)));
      const Walk w = geodesic(p_, a, b);
      const bool ok = verify_walk(p_, w) && w.claimed_length == dist[static_cast<std::size_t>(t)];
      if (!ok && walk_failures_++ == 0) {
        walk_first_ = "geodesic " + a.to_string() + " -> " + b.to_string() + " has length " +
                      std::to_string(w.claimed_length) + ", BFS distance " +
                      std::to_string(dist[static_cast<std::size_t>(t)]);
      }
    }
  }

  void report(Recorder& rec) const {
    rec.bulk(Criterion::LowerBound, lemma_checks_, lemma_failures_, lemma_first_);
    rec.bulk(Criterion::Witness, walk_checks_, walk_failures_, walk_first_);
  }

 private:
  Parameters p_;
  const ExplicitGraph& g_;
  int delta_;
  std::mt19937_64 rng_;
  std::uint64_t lemma_checks_ = 0, lemma_failures_ = 0;
  std::uint64_t walk_checks_ = 0, walk_failures_ = 0;
  std::string lemma_first_, walk_first_;
};

void check_formula_identities(const Parameters& p, const InvariantReport& formula, Recorder& rec) {
  const Parameters q = normalize(p);
  const int k = q.k(), i = q.i(), d = delta(q);

  int profile_max = 0;
  for (const auto& [x, dist] : formula.distance_profile) profile_max = std::max(profile_max, dist.value());
  rec.check(Criterion::Diameter, diameter(q) == Quantity::finite(profile_max),
            [&] { return "diameter " + show(diameter(q)) + " but profile max " + std::to_string(profile_max); });

  const int g = girth(q).value();
  const int og = odd_girth(q).value();
  rec.check(Criterion::OddGirth, og % 2 == 1 && og >= g && (g % 2 == 0 || og == g),
            [&] { return "odd girth " + std::to_string(og) + " vs girth " + std::to_string(g); });

  for (int x = 0; x <= k; ++x) {
    const int dist = distance_by_intersection(q, x).value();
    if (dist < 2) continue;
    rec.check(Criterion::Distance, has_common_neighbor(q, x) == (dist == 2),
              [&] { return "common-neighbor predicate disagrees with distance at x=" + std::to_string(x); });
  }

  if (k > i + 1) {
    // Exhaustive maximum, evaluated directly rather than through the module.
    int best = 0;
    for (int x = i + 1; x <= k; ++x) {
      const int even = 2 * ((k - x + d - 1) / d);
      const int odd = 2 * ((x - i + d - 1) / d) + 1;
      best = std::max(best, std::min(even, odd));
    }
    rec.check(Criterion::MaxLemma, best == max_f(q),
              [&] { return "exhaustive max " + std::to_string(best) + ", closed form " + std::to_string(max_f(q)); });
  }
}

void check_witnesses(const Parameters& p, const InvariantReport& formula, const OracleReport& oracle, Recorder& rec) {
  const VertexSet a = canonical_vertex(p);
  for (const auto& [x, dist] : formula.distance_profile) {
    const VertexSet b = canonical_partner(p, x);
    const Walk w = geodesic(p, a, b);
    rec.check(Criterion::Witness,
              verify_walk(p, w) && Quantity::finite(w.claimed_length) == dist &&
                  oracle.distance_profile.at(x) == dist,
              [&, x = x] { return "canonical geodesic at x=" + std::to_string(x) + " has length " +
                                  std::to_string(w.claimed_length); });
    const int d = dist.value();
    if (d == 2 || x == p.k() || (d == 1 && formula.girth == Quantity::finite(3))) {
      const VertexSet c = common_neighbor(p, a, b);
      rec.check(Criterion::Witness,
                is_vertex(p, c) && intersection_size(a, c) == p.i() && intersection_size(b, c) == p.i(),
                [&, x = x] { return "common neighbor at x=" + std::to_string(x) + " is " + c.to_string(); });
    }
  }

  const Walk cycle = shortest_cycle(p);
  rec.check(Criterion::Witness,
            verify_walk(p, cycle) && Quantity::finite(cycle.claimed_length) == formula.girth &&
                formula.girth == oracle.girth,
            [&] { return "shortest cycle of length " + std::to_string(cycle.claimed_length); });
  const Walk odd = odd_closed_walk(p);
  rec.check(Criterion::Witness,
            verify_walk(p, odd) && Quantity::finite(odd.claimed_length) == formula.odd_girth &&
                odd.claimed_length % 2 == 1,
            [&] { return "odd closed walk of length " + std::to_string(odd.claimed_length); });
}

void check_complement(const Parameters& p, const ExplicitGraph& g, const OracleReport& oracle,
                      const SweepConfig& config, Recorder& rec) {
  const Parameters q = normalize(p);
  const ExplicitGraph h = build_graph(q, config.max_vertices);
  rec.check(Criterion::Complement, complement_isomorphic(g, h),
            [&] { return "complementation is not an isomorphism onto " + q.to_string(); });

  OracleOptions options;
  options.seed = config.seed;
  options.sampled_sources = config.sampled_sources;
  const OracleReport other = oracle_report(h, options);
  rec.check(Criterion::Complement,
            other.girth == oracle.girth && other.odd_girth == oracle.odd_girth && other.diameter == oracle.diameter,
            [&] { return "oracle invariants of " + p.to_string() + " and " + q.to_string() + " differ"; });
  const int shift = p.v() - 2 * p.k();
  bool profiles_match = other.distance_profile.size() == oracle.distance_profile.size();
  for (const auto& [xq, d] : other.distance_profile) {
    const auto it = oracle.distance_profile.find(xq - shift);
    profiles_match = profiles_match && it != oracle.distance_profile.end() && it->second == d;
  }
  rec.check(Criterion::Complement, profiles_match,
            [&] { return "distance profiles differ under x -> x - (v - 2k)"; });
}

void check_degenerate(const Parameters& p, const ExplicitGraph& g, const InvariantReport& formula,
                      const OracleReport& oracle, Recorder& rec) {
  if (p.graph_class() == GraphClass::Matching) {
    bool one_regular = true;
    for (std::size_t u = 0; u < g.vertex_count(); ++u) one_regular = one_regular && g.degree(u) == 1;
    rec.check(Criterion::Degenerate,
              one_regular && g.edge_count() * 2 == g.vertex_count() && oracle.connected == (p.k() == 1) &&
                  oracle.girth.is_undefined() && oracle.odd_girth.is_undefined() && formula.girth.is_undefined() &&
                  formula.odd_girth.is_undefined() &&
                  // J(2,1,0) is a single edge; every larger matching is disconnected.
                  formula.diameter == (p.k() == 1 ? Quantity::finite(1) : Quantity::infinite()),
              [&] { return "matching class not reported as a disconnected acyclic 1-regular graph"; });
  } else {
    rec.check(Criterion::Degenerate, g.edge_count() == 0 && formula.girth.is_undefined(),
              [&] { return std::string(to_string(p.graph_class())) + " graph has " +
                           std::to_string(g.edge_count()) + " edges"; });
  }
}

}  // namespace

std::string_view to_string(Criterion c) noexcept {
  switch (c) {
    case Criterion::Girth: return "girth";
    case Criterion::OddGirth: return "odd-girth";
    case Criterion::Distance: return "distance";
    case Criterion::Diameter: return "diameter";
    case Criterion::MaxLemma: return "max-lemma";
    case Criterion::LowerBound: return "lower-bound";
    case Criterion::Witness: return "witness";
    case Criterion::Complement: return "complement";
    case Criterion::Degenerate: return "degenerate";
    case Criterion::Structure: return "structure";
  }
  return "unknown";
}

bool SweepSummary::passed() const noexcept { return !outcomes.empty() && failed_count() == 0; }

std::size_t SweepSummary::failed_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const TripleOutcome& o) { return !o.passed(); }));
}

void validate(const SweepConfig& config) {
  if (config.v_max < 2 || config.v_max > 64) {
    throw Error(ErrorCode::InvalidConfig, "v_max must be in [2, 64], got " + std::to_string(config.v_max));
  }
  if (config.max_vertices == 0) throw Error(ErrorCode::InvalidConfig, "max_vertices must be positive");
  if (config.jobs == 0) throw Error(ErrorCode::InvalidConfig, "jobs must be positive");
  if (config.sampled_sources < 0) throw Error(ErrorCode::InvalidConfig, "sampled_sources must be >= 0");
}

std::vector<Parameters> sweep_triples(const SweepConfig& config, std::size_t* skipped) {
  validate(config);
  std::vector<Parameters> out;
  std::size_t left_out = 0;
  for (int v = 2; v <= config.v_max; ++v) {
    for (int k = 1; k < v; ++k) {
      for (int i = 0; i < k; ++i) {
        if (binomial(v, k) > config.max_vertices) {
          ++left_out;
          continue;
        }
        out.push_back(make_parameters(v, k, i));
      }
    }
  }
  if (skipped != nullptr) *skipped = left_out;
  return out;
}

TripleOutcome verify_triple(const Parameters& p, const SweepConfig& config) {
  TripleOutcome out{p, {}, {}};
  Recorder rec(out);
  try {
    const ExplicitGraph g = build_graph(p, config.max_vertices);
    check_structure(p, g, rec);

    const bool standard = is_standard(p.graph_class());
    BfsAudit audit(p, g, config.seed ^ (static_cast<std::uint64_t>(p.v()) << 32 | p.k() << 16 | p.i()));
    OracleOptions options;
    options.seed = config.seed;
    options.sampled_sources = config.sampled_sources;
    if (standard) options.on_bfs = std::ref(audit);

    const OracleReport oracle = oracle_report(g, options);
    const InvariantReport formula = invariant_report(p);
    compare_reports(formula, oracle, rec);
    rec.check(Criterion::Structure, !export_report(formula).empty() && !export_report(oracle).empty(),
              [] { return std::string("empty report export"); });

    if (standard) {
      audit.report(rec);
      check_formula_identities(p, formula, rec);
      check_witnesses(p, formula, oracle, rec);
      if (!p.is_normalized()) check_complement(p, g, oracle, config, rec);
    } else {
      check_degenerate(p, g, formula, oracle, rec);
    }
  } catch (const Error& e) {
    // Sampled pairs or sources disagreeing means distance is not a function of x.
    const Criterion c = e.code() == ErrorCode::OracleInconsistency ? Criterion::Distance : Criterion::Structure;
    rec.check(c, false, [&] { return std::string("exception: ") + e.what(); });
  } catch (const std::exception& e) {
    rec.check(Criterion::Structure, false, [&] { return std::string("exception: ") + e.what(); });
  }
  return out;
}

SweepSummary run_sweep(const SweepConfig& config) {
  SweepSummary summary;
  const std::vector<Parameters> triples = sweep_triples(config, &summary.skipped);
  summary.outcomes.resize(triples.size(), TripleOutcome{make_parameters(0, 0, 0), {}, {}});

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < triples.size(); j = next++) {
      summary.outcomes[j] = verify_triple(triples[j], config);
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(triples.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& o : summary.outcomes) {
    for (std::size_t c = 0; c < kCriterionCount; ++c) {
      summary.totals[c].checks += o.tallies[c].checks;
      summary.totals[c].failures += o.tallies[c].failures;
    }
  }
  return summary;
}

}  // namespace gjg
