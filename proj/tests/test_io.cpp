#include "doctest.h"
#include "fixtures.hpp"
#include "reeb/condition.hpp"
#include "reeb/io.hpp"
#include "reeb/multipass.hpp"

using namespace reeb;

TEST_SUITE_BEGIN("io");

TEST_CASE("graph json round trip is canonical") {
  const ReebGraph g = fixtures::fig1();
  const std::string text = graph_to_json(g);
  const ReebGraph back = graph_from_json(text);
  CHECK(graph_to_json(back) == text);
  CHECK(back.node_count() == g.node_count());
  CHECK(back.edge_count() == g.edge_count());
  CHECK(back.content_hash() == g.content_hash());
}

TEST_CASE("conditioned graphs keep synthetic placement through files") {
  ReebGraph raw;
  raw.add_node("A", 0.0);
  raw.add_node("B", 1.0);
  raw.add_edge(0, 1);
  raw.add_edge(0, 1);
  raw.finalize();
  const ReebGraph g = condition(raw).graph;

  const std::string text = graph_to_json(g);
  CHECK(text.find("\"synthetic\":true") != std::string::npos);
  CHECK(text.find("\"ord\":") != std::string::npos);

  const ReebGraph back = graph_from_json(text);
  CHECK(is_conditioned(back));
  CHECK(back.node(back.find_node("A.min")).synthetic);
  // A.min shares A's value but sits below it in the order
  CHECK(back.rank(back.find_node("A.min")) < back.rank(back.find_node("A")));
  CHECK(graph_to_json(back) == text);
}

TEST_CASE("graph parse errors carry diagnostics") {
  CHECK_THROWS_WITH_AS(graph_from_json("{"), doctest::Contains("JSON parse error"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(graph_from_json(R"({"format":"x","version":1,"nodes":[],"edges":[]})"),
                       doctest::Contains("format"), std::runtime_error);
  CHECK_THROWS_WITH_AS(
      graph_from_json(
          R"({"format":"reeb-graph","version":1,"nodes":[{"id":"a","f":0}],"edges":[["a","b"]]})"),
      doctest::Contains("unknown node"), std::runtime_error);
  CHECK_THROWS_WITH_AS(
      graph_from_json(
          R"({"format":"reeb-graph","version":1,"nodes":[{"id":"a","f":0}],"edges":[["a","a"]]})"),
      doctest::Contains("self-loop"), std::runtime_error);
  // JSON itself cannot express non-finite values; oversized literals fail at parse
  CHECK_THROWS_WITH_AS(
      graph_from_json(
          R"({"format":"reeb-graph","version":1,"nodes":[{"id":"a","f":1e999}],"edges":[]})"),
      doctest::Contains("JSON parse error"), std::runtime_error);
}

TEST_CASE("diagram csv round trip") {
  const ReebGraph g = fixtures::fig1();
  const std::vector<DiagramRow> rows = diagram_rows(pair_multipass(g), g);
  const std::string csv = diagram_to_csv(rows);
  CHECK(diagram_from_csv(csv) == rows);

  // quoted ids survive
  std::vector<DiagramRow> tricky = rows;
  tricky[0].birth_id = "we,ird \"id\"";
  CHECK(diagram_from_csv(diagram_to_csv(tricky)) == tricky);

  CHECK_THROWS_AS(diagram_from_csv("not,a,header\n"), std::runtime_error);
}

TEST_CASE("svg output is well formed with one marker per pair") {
  const ReebGraph g = fixtures::fig1();
  const std::vector<DiagramRow> rows = diagram_rows(pair_multipass(g), g);
  const std::string svg = diagram_to_svg(rows);

  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::size_t circles = 0;
  for (std::size_t at = svg.find("<circle"); at != std::string::npos;
       at = svg.find("<circle", at + 1))
    ++circles;
  CHECK(circles == rows.size());
  // both panels render
  CHECK(svg.find("Dg0") != std::string::npos);
  CHECK(svg.find("eDg1") != std::string::npos);
}

TEST_SUITE_END();
