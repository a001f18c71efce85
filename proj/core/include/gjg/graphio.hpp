#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "gjg/formulas.hpp"
#include "gjg/oracle.hpp"

namespace gjg {

enum class GraphFormat { EdgeList, Dimacs };

std::optional<GraphFormat> parse_graph_format(std::string_view name);

/// EdgeList: "u v" per edge, 0-based ranks, u < v, sorted by (u, v).
/// Dimacs: "p edge n m" then "e u v" per edge, 1-based ranks, same order.
/// Every line ends in '\n'.
void export_graph(const ExplicitGraph& g, GraphFormat format, std::ostream& out);
std::string export_graph(const ExplicitGraph& g, GraphFormat format);

inline constexpr int kReportSchemaVersion = 1;

// Reports are line-oriented "key: value" documents (a YAML subset):
//
//   schema_version: 1
//   v: 5
//   k: 2
//   i: 0
//   delta: 1
//   class: OddGraph
//   girth: 5
//   odd_girth: 5
//   diameter: 2
//   distance_profile:
//     0: 1
//     1: 2
//     2: 0
//   connected: true          (oracle reports only)
//
// Infinite and undefined values are written as "infinite" / "undefined".
void export_report(const InvariantReport& report, std::ostream& out);
void export_report(const OracleReport& report, std::ostream& out);
std::string export_report(const InvariantReport& report);
std::string export_report(const OracleReport& report);

}  // namespace gjg
