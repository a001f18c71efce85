#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "gjg/formulas.hpp"
#include "gjg/graphio.hpp"
#include "gjg/oracle.hpp"

namespace gjg {
namespace {

Parameters P(int v, int k, int i) { return make_parameters(v, k, i); }

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GJG_TEST_DATA_DIR) + "/" + name, std::ios::binary);
  EXPECT_TRUE(in) << name;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(ParseGraphFormat, Names) {
  EXPECT_EQ(parse_graph_format("edgelist"), GraphFormat::EdgeList);
  EXPECT_EQ(parse_graph_format("dimacs"), GraphFormat::Dimacs);
  EXPECT_FALSE(parse_graph_format("graphml").has_value());
}

TEST(ExportGraph, MatchesGoldenFiles) {
  EXPECT_EQ(export_graph(build_graph(P(5, 2, 0)), GraphFormat::Dimacs), slurp("j5_2_0.dimacs"));
  EXPECT_EQ(export_graph(build_graph(P(6, 3, 0)), GraphFormat::EdgeList), slurp("j6_3_0.edgelist"));
  EXPECT_EQ(export_graph(build_graph(P(4, 2, 1)), GraphFormat::EdgeList), slurp("j4_2_1.edgelist"));
  EXPECT_EQ(export_graph(build_graph(P(5, 3, 0)), GraphFormat::Dimacs), slurp("j5_3_0.dimacs"));
}

TEST(ExportGraph, LineCounts) {
  const auto g = build_graph(P(8, 4, 1));
  const auto text = export_graph(g, GraphFormat::Dimacs);
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')), g.edge_count() + 1);
  EXPECT_EQ(text.rfind("p edge 70 ", 0), 0U);
  const auto list = export_graph(g, GraphFormat::EdgeList);
  EXPECT_EQ(static_cast<std::size_t>(std::count(list.begin(), list.end(), '\n')), g.edge_count());
}

TEST(ExportGraph, EmptyEdgeListIsEmpty) {
  EXPECT_EQ(export_graph(build_graph(P(5, 3, 0)), GraphFormat::EdgeList), "");
}

TEST(ExportReport, InvariantReport) {
  const std::string expected =
      "schema_version: 1\n"
      "v: 5\n"
      "k: 2\n"
      "i: 0\n"
      "delta: 1\n"
      "class: OddGraph\n"
      "girth: 5\n"
      "odd_girth: 5\n"
      "diameter: 2\n"
      "distance_profile:\n"
      "  0: 1\n"
      "  1: 2\n"
      "  2: 0\n";
  EXPECT_EQ(export_report(invariant_report(P(5, 2, 0))), expected);
}

TEST(ExportReport, DegenerateValuesAreSpelledOut) {
  const auto text = export_report(invariant_report(P(6, 3, 0)));
  EXPECT_NE(text.find("girth: undefined\n"), std::string::npos);
  EXPECT_NE(text.find("diameter: infinite\n"), std::string::npos);
  EXPECT_NE(text.find("  1: infinite\n"), std::string::npos);
  EXPECT_NE(text.find("class: Matching\n"), std::string::npos);
}

TEST(ExportReport, OracleReportAgreesWithFormulaReport) {
  for (const auto& p : {P(5, 2, 0), P(8, 4, 1), P(7, 4, 2), P(6, 3, 0)}) {
    const auto formula = export_report(invariant_report(p));
    const auto oracle = export_report(oracle_report(p));
    const bool connected = p.graph_class() != GraphClass::Matching;
    EXPECT_EQ(oracle, formula + (connected ? "connected: true\n" : "connected: false\n")) << p;
  }
}

}  // namespace
}  // namespace gjg
