#include "gjg/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <thread>

#include "CLI11.hpp"
#include "gjg/combinadic.hpp"
#include "gjg/error.hpp"
#include "gjg/formulas.hpp"
#include "gjg/graphio.hpp"
#include "gjg/oracle.hpp"
#include "gjg/sweep.hpp"
#include "gjg/witness.hpp"

namespace gjg::cli {
namespace {

struct Options {
  int v = 0;
  int k = 0;
  int i = 0;
  std::optional<int> x;
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::string emit = "text";
  std::string format;
  std::optional<std::string> out_path;
  int v_max = 16;
  std::optional<std::uint64_t> max_vertices;
  std::string jobs = "1";
  bool witness = false;
  std::string kind;
};

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t vertex_budget(const Options& opt, const Environment& env) {
  if (opt.max_vertices) return *opt.max_vertices;
  if (env.max_vertices) {
    const std::string& s = *env.max_vertices;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || value == 0) {
      throw ConfigError("GJG_MAX_VERTICES must be a positive integer, got '" + s + "'");
    }
    return value;
  }
  return kDefaultVertexBudget;
}

void add_triple(CLI::App* cmd, Options& opt) {
  cmd->add_option("--v", opt.v, "ground set size")->required();
  cmd->add_option("--k", opt.k, "subset size")->required();
  cmd->add_option("--i", opt.i, "intersection size of adjacent subsets")->required();
}

void add_pair(CLI::App* cmd, Options& opt) {
  auto* x = cmd->add_option("--x", opt.x, "intersection size of the canonical pair");
  auto* a = cmd->add_option("--a", opt.a, "first vertex, e.g. 0,1,2,3");
  auto* b = cmd->add_option("--b", opt.b, "second vertex");
  a->needs(b);
  b->needs(a);
  x->excludes(a);
  x->excludes(b);
}

void add_emit(CLI::App* cmd, Options& opt) {
  cmd->add_option("--emit", opt.emit, "output style")->check(CLI::IsMember({"text", "structured"}));
}

// (A, B) from --a/--b, or the canonical pair from --x.
std::pair<VertexSet, VertexSet> resolve_pair(const Parameters& p, const Options& opt) {
  if (opt.x) return {canonical_vertex(p), canonical_partner(p, *opt.x)};
  VertexSet a = parse_vertex_set(*opt.a);
  VertexSet b = parse_vertex_set(*opt.b);
  for (const auto* s : {&a, &b}) {
    if (!is_vertex(p, *s)) {
      throw Error(ErrorCode::InvalidSet, s->to_string() + " is not a vertex of " + p.to_string());
    }
  }
  return {std::move(a), std::move(b)};
}

void print_walk(const Parameters& p, const Walk& w, bool verified, std::ostream& out) {
  out << to_string(w.kind) << " of length " << w.claimed_length << (verified ? " (verified)" : " (INVALID)")
      << '\n';
  for (std::size_t j = 0; j < w.vertices.size(); ++j) {
    out << "  " << std::setw(3) << j << "  rank " << std::setw(6) << rank(p, w.vertices[j]).value << "  "
        << w.vertices[j] << '\n';
  }
}

int cmd_invariants(const Options& opt, std::ostream& out) {
  const Parameters p = make_parameters(opt.v, opt.k, opt.i);
  const InvariantReport r = invariant_report(p);
  if (opt.emit == "structured") {
    export_report(r, out);
    return kExitOk;
  }
  out << p << '\n'
      << "class:      " << to_string(p.graph_class()) << '\n'
      << "delta:      " << r.delta << '\n'
      << "girth:      " << r.girth << '\n'
      << "odd girth:  " << r.odd_girth << '\n'
      << "diameter:   " << r.diameter << '\n'
      << "distance by intersection size:\n";
  for (const auto& [x, d] : r.distance_profile) out << "  x=" << x << "  " << d << '\n';
  return kExitOk;
}

int cmd_distance(const Options& opt, std::ostream& out, std::ostream& err) {
  if (!opt.x && !opt.a) {
    err << "distance: give --x or both --a and --b\n";
    return kExitUsage;
  }
  const Parameters p = make_parameters(opt.v, opt.k, opt.i);
  const auto [a, b] = resolve_pair(p, opt);
  const int x = intersection_size(a, b);
  const Quantity d = invariant_report(p).distance_profile.at(x);

  if (opt.emit == "structured") {
    out << "schema_version: " << kReportSchemaVersion << '\n'
        << "v: " << p.v() << "\nk: " << p.k() << "\ni: " << p.i() << '\n'
        << "x: " << x << '\n'
        << "distance: " << d << '\n';
  } else {
    out << d << '\n';
  }
  if (!opt.witness) return kExitOk;
  if (!d.is_finite()) {
    out << "no path: " << a << " and " << b << " are in different components\n";
    return kExitOk;
  }
  const Walk w = geodesic(p, a, b);
  const bool ok = verify_walk(p, w) && w.claimed_length == d.value();
  print_walk(p, w, ok, out);
  if (!ok) {
    err << "internal error: geodesic failed verification\n";
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_witness(const Options& opt, std::ostream& out, std::ostream& err) {
  const Parameters p = make_parameters(opt.v, opt.k, opt.i);
  Walk w;
  Quantity expected = Quantity::undefined();
  if (opt.kind == "cycle") {
    w = shortest_cycle(p);
    expected = girth(p);
  } else if (opt.kind == "oddwalk") {
    w = odd_closed_walk(p);
    expected = odd_girth(p);
  } else {
    if (!opt.x && !opt.a) {
      err << "witness geodesic: give --x or both --a and --b\n";
      return kExitUsage;
    }
    const auto [a, b] = resolve_pair(p, opt);
    w = geodesic(p, a, b);
    expected = invariant_report(p).distance_profile.at(intersection_size(a, b));
  }
  const bool ok = verify_walk(p, w) && Quantity::finite(w.claimed_length) == expected;
  out << p << ' ' << opt.kind << ": ";
  print_walk(p, w, ok, out);
  if (!ok) {
    err << "internal error: constructed walk failed verification\n";
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, const Environment& env, std::ostream& out, std::ostream& err) {
  SweepConfig config;
  config.v_max = opt.v_max;
  config.max_vertices = vertex_budget(opt, env);
  if (opt.jobs == "auto") {
    config.jobs = std::max(1U, std::thread::hardware_concurrency());
  } else {
    unsigned jobs = 0;
    auto [ptr, ec] = std::from_chars(opt.jobs.data(), opt.jobs.data() + opt.jobs.size(), jobs);
    if (ec != std::errc{} || ptr != opt.jobs.data() + opt.jobs.size() || jobs == 0) {
      throw ConfigError("--jobs must be a positive integer or 'auto', got '" + opt.jobs + "'");
    }
    config.jobs = jobs;
  }
  validate(config);

  const SweepSummary summary = run_sweep(config);
  if (summary.outcomes.empty()) {
    err << "warning: nothing verified: no triple with v <= " << config.v_max << " fits a budget of "
        << config.max_vertices << " vertices\n";
    return kExitConfig;
  }

  for (const auto& o : summary.outcomes) {
    out << (o.passed() ? "PASS " : "FAIL ") << o.params << ' ' << to_string(o.params.graph_class()) << '\n';
    for (const auto& f : o.failures) out << "    " << f << '\n';
  }
  out << "\nchecks by criterion:\n";
  for (std::size_t c = 0; c < kCriterionCount; ++c) {
    const auto& t = summary.totals[c];
    out << "  " << std::left << std::setw(12) << to_string(static_cast<Criterion>(c)) << std::right
        << std::setw(12) << t.checks << " checks  " << t.failures << " failures\n";
  }
  out << "\ntriples: " << summary.outcomes.size() << " checked, " << summary.failed_count() << " failed, "
      << summary.skipped << " over budget\n";
  out << (summary.passed() ? "ALL PASS" : "FAILURES FOUND") << '\n';
  return summary.passed() ? kExitOk : kExitDomain;
}

int cmd_export(const Options& opt, const Environment& env, std::ostream& out, std::ostream& err) {
  const auto format = parse_graph_format(opt.format);
  const Parameters p = make_parameters(opt.v, opt.k, opt.i);
  const ExplicitGraph g = build_graph(p, vertex_budget(opt, env));
  if (!opt.out_path) {
    export_graph(g, *format, out);
    return kExitOk;
  }
  std::ofstream file(*opt.out_path, std::ios::binary);
  if (!file) {
    err << "cannot open " << *opt.out_path << " for writing\n";
    return kExitDomain;
  }
  export_graph(g, *format, file);
  file.close();
  if (!file) {
    err << "write to " << *opt.out_path << " failed\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace

Environment environment_from_process() {
  Environment env;
  if (const char* s = std::getenv("GJG_MAX_VERTICES")) env.max_vertices = s;
  return env;
}

int run(const std::vector<std::string>& args, const Environment& env, std::ostream& out, std::ostream& err) {
  CLI::App app{"Girth, odd girth, distance and diameter of generalized Johnson graphs J(v,k,i)", "gjg"};
  app.require_subcommand(1);
  Options opt;

  auto* invariants = app.add_subcommand("invariants", "closed-form invariant report");
  add_triple(invariants, opt);
  add_emit(invariants, opt);

  auto* distance = app.add_subcommand("distance", "distance between two vertices");
  add_triple(distance, opt);
  add_pair(distance, opt);
  add_emit(distance, opt);
  distance->add_flag("--witness", opt.witness, "also print a shortest path");

  auto* witness = app.add_subcommand("witness", "explicit cycle, odd closed walk, or geodesic");
  add_triple(witness, opt);
  witness->add_option("kind", opt.kind, "cycle | oddwalk | geodesic")
      ->required()
      ->check(CLI::IsMember({"cycle", "oddwalk", "geodesic"}));
  add_pair(witness, opt);

  auto* verify = app.add_subcommand("verify", "check every formula against the brute-force oracle");
  verify->add_option("--v-max", opt.v_max, "largest ground set size in the sweep");
  verify->add_option("--max-vertices", opt.max_vertices, "oracle vertex budget per graph");
  verify->add_option("--jobs", opt.jobs, "worker threads, or 'auto'");

  auto* exporter = app.add_subcommand("export", "write the explicit graph");
  add_triple(exporter, opt);
  exporter->add_option("--format", opt.format, "edgelist | dimacs")
      ->required()
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  exporter->add_option("--out", opt.out_path, "output file (default: stdout)");
  exporter->add_option("--max-vertices", opt.max_vertices, "oracle vertex budget");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (invariants->parsed()) return cmd_invariants(opt, out);
    if (distance->parsed()) return cmd_distance(opt, out, err);
    if (witness->parsed()) return cmd_witness(opt, out, err);
    if (verify->parsed()) return cmd_verify(opt, env, out, err);
    if (exporter->parsed()) return cmd_export(opt, env, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InvalidConfig ? kExitConfig : kExitDomain;
  }
  return kExitUsage;
}

}  // namespace gjg::cli
