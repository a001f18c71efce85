#include "gjg/graphio.hpp"

#include <sstream>

namespace gjg {
namespace {

void write_common(std::ostream& out, const Parameters& p, int delta, const Quantity& girth,
                  const Quantity& odd_girth, const Quantity& diameter, const std::map<int, Quantity>& profile) {
  out << "schema_version: " << kReportSchemaVersion << '\n'
      << "v: " << p.v() << '\n'
      << "k: " << p.k() << '\n'
      << "i: " << p.i() << '\n'
      << "delta: " << delta << '\n'
      << "class: " << to_string(p.graph_class()) << '\n'
      << "girth: " << girth << '\n'
      << "odd_girth: " << odd_girth << '\n'
      << "diameter: " << diameter << '\n'
      << "distance_profile:\n";
  for (const auto& [x, d] : profile) out << "  " << x << ": " << d << '\n';
}

}  // namespace

std::optional<GraphFormat> parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  return std::nullopt;
}

void export_graph(const ExplicitGraph& g, GraphFormat format, std::ostream& out) {
  const bool dimacs = format == GraphFormat::Dimacs;
  const std::size_t base = dimacs ? 1 : 0;
  if (dimacs) out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  std::string line;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    g.for_each_neighbor(u, [&](std::size_t w) {
      if (w <= u) return;
      line.clear();
      if (dimacs) line += "e ";
      line += std::to_string(u + base);
      line += ' ';
      line += std::to_string(w + base);
      line += '\n';
      out << line;
    });
  }
}

std::string export_graph(const ExplicitGraph& g, GraphFormat format) {
  std::ostringstream out;
  export_graph(g, format, out);
  return out.str();
}

void export_report(const InvariantReport& r, std::ostream& out) {
  write_common(out, r.params, r.delta, r.girth, r.odd_girth, r.diameter, r.distance_profile);
}

void export_report(const OracleReport& r, std::ostream& out) {
  write_common(out, r.params, r.delta, r.girth, r.odd_girth, r.diameter, r.distance_profile);
  out << "connected: " << (r.connected ? "true" : "false") << '\n';
}

std::string export_report(const InvariantReport& report) {
  std::ostringstream out;
  export_report(report, out);
  return out.str();
}

std::string export_report(const OracleReport& report) {
  std::ostringstream out;
  export_report(report, out);
  return out.str();
}

}  // namespace gjg
