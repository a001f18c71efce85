#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gjg/oracle.hpp"
#include "gjg/params.hpp"

namespace gjg {

/// What a sweep check establishes. Each failure is filed under exactly one.
enum class Criterion {
  Girth,
  OddGirth,
  Distance,
  Diameter,
  MaxLemma,
  LowerBound,
  Witness,
  Complement,
  Degenerate,
  Structure,  // adjacency symmetry, degrees, rank/unrank, exports
};

inline constexpr std::size_t kCriterionCount = 10;

std::string_view to_string(Criterion c) noexcept;

struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
};

using Tallies = std::array<Tally, kCriterionCount>;

struct TripleOutcome {
  Parameters params;
  Tallies tallies{};
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

struct SweepConfig {
  std::uint64_t max_vertices = kDefaultVertexBudget;
  int v_max = 16;
  unsigned jobs = 1;
  std::uint64_t seed = 0x5eed;
  /// Random BFS sources per graph; each yields one sampled pair per x.
  int sampled_sources = 10;
};

struct SweepSummary {
  std::vector<TripleOutcome> outcomes;  // sorted by (v, k, i)
  std::size_t skipped = 0;              // triples over the vertex budget
  Tallies totals{};

  bool passed() const noexcept;
  std::size_t failed_count() const noexcept;
};

/// Throws Error{InvalidConfig} unless 2 <= v_max <= 64, max_vertices >= 1,
/// jobs >= 1 and sampled_sources >= 0.
void validate(const SweepConfig& config);

/// Every (v, k, i) with 2 <= v <= v_max and v > k > i >= 0 whose graph fits
/// the budget, sorted; *skipped receives the number left out.
std::vector<Parameters> sweep_triples(const SweepConfig& config, std::size_t* skipped = nullptr);

/// All formula/oracle/witness checks for one triple. Never throws: errors
/// become failures.
TripleOutcome verify_triple(const Parameters& p, const SweepConfig& config);

/// Runs verify_triple over sweep_triples on config.jobs threads.
SweepSummary run_sweep(const SweepConfig& config);

}  // namespace gjg
