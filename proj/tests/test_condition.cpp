#include "doctest.h"
#include "fixtures.hpp"
#include "reeb/condition.hpp"
#include "reeb/generators.hpp"
#include "reeb/oracle.hpp"

using namespace reeb;

TEST_SUITE_BEGIN("conditioning");

TEST_CASE("remove_regular splices paths") {
  const ReebGraph path = fixtures::make_graph(
      {{"A", 1}, {"B", 2}, {"C", 3}}, {{"A", "B"}, {"B", "C"}});
  const ConditionResult res = remove_regular(path);
  CHECK(res.graph.node_count() == 2);
  CHECK(res.graph.edge_count() == 1);
  CHECK(res.report.removed == std::vector<std::string>{"B"});
  CHECK(res.report.mapping.count("B") == 0);
  CHECK(res.report.mapping.at("A") == "A");

  // chain of five regular nodes between a fork and the rest
  const ReebGraph chain = fixtures::make_graph(
      {{"m1", 0}, {"m2", 1}, {"s", 2}, {"r1", 3}, {"r2", 4}, {"r3", 5},
       {"r4", 6}, {"r5", 7}, {"top", 8}},
      {{"m1", "s"}, {"m2", "s"}, {"s", "r1"}, {"r1", "r2"}, {"r2", "r3"},
       {"r3", "r4"}, {"r4", "r5"}, {"r5", "top"}});
  const ConditionResult collapsed = remove_regular(chain);
  CHECK(collapsed.graph.node_count() == 4);
  CHECK(collapsed.report.removed.size() == 5);
  CHECK(validate_conditioned(collapsed.graph).empty());

  // idempotent on a graph without regular nodes
  const ConditionResult again = remove_regular(collapsed.graph);
  CHECK(again.graph.node_count() == 4);
  CHECK(again.report.removed.empty());
}

TEST_CASE("split_degenerate_extremum fixes a double edge") {
  ReebGraph raw;
  raw.add_node("A", 0.0);
  raw.add_node("B", 1.0);
  raw.add_edge(0, 1);
  raw.add_edge(0, 1);
  raw.finalize();

  const ConditionResult res = split_degenerate_extremum(raw);
  const ReebGraph& g = res.graph;
  CHECK(g.node_count() == 4);
  CHECK(res.report.inserted.size() == 2);
  CHECK(validate_conditioned(g).empty());
  CHECK(g.kind(g.find_node("A")) == CriticalKind::UpFork);
  CHECK(g.kind(g.find_node("B")) == CriticalKind::DownFork);
  CHECK(g.kind(g.find_node("A.min")) == CriticalKind::Minimum);
  CHECK(g.kind(g.find_node("B.max")) == CriticalKind::Maximum);
  CHECK(g.node(g.find_node("A.min")).synthetic);
  // synthetic extrema keep the nominal value, sitting just outside in order
  CHECK(g.node(g.find_node("A.min")).f == 0.0);
  CHECK(g.rank(g.find_node("A.min")) == 0);

  // the oracle then sees one cycle and the global pair
  const PersistenceDiagram d = oracle_diagram(g);
  CHECK(d.pairs.size() == 2);
  std::size_t synthetic = 0;
  for (const PersistencePair& p : d.pairs)
    if (p.synthetic) ++synthetic;
  CHECK(synthetic == 1);  // the global pair touches both synthetic extrema

  CHECK(split_degenerate_extremum(g).report.inserted.empty());
}

TEST_CASE("split_double_fork separates a 2:2 node") {
  const ReebGraph raw = fixtures::make_graph(
      {{"A", 0}, {"B", 1}, {"X", 2}, {"C", 3}, {"D", 4}},
      {{"A", "X"}, {"B", "X"}, {"X", "C"}, {"X", "D"}});
  const ConditionResult res = split_double_fork(raw);
  const ReebGraph& g = res.graph;
  CHECK(g.node_count() == 6);
  CHECK(g.kind(g.find_node("X")) == CriticalKind::DownFork);
  CHECK(g.kind(g.find_node("X.s")) == CriticalKind::UpFork);
  // the upper part keeps both up edges
  bool up_c = false, up_d = false;
  for (const ReebGraph::Adj& a : g.neighbors(g.find_node("X.s"))) {
    if (g.node(a.to).id == "C") up_c = true;
    if (g.node(a.to).id == "D") up_d = true;
  }
  CHECK(up_c);
  CHECK(up_d);

  // figure-eight waist: 2:2 node on two loops keeps its cycle rank
  ReebGraph eight;
  eight.add_node("lo", 0.0);
  eight.add_node("X", 1.0);
  eight.add_node("hi", 2.0);
  eight.add_edge(0, 1);
  eight.add_edge(0, 1);
  eight.add_edge(1, 2);
  eight.add_edge(1, 2);
  eight.finalize();
  CHECK(cycle_rank(eight) == 2);
  const ConditionResult fixed = condition(eight);
  CHECK(cycle_rank(fixed.graph) == 2);
  CHECK(validate_conditioned(fixed.graph).empty());
}

TEST_CASE("split_complex_fork chains binary forks") {
  // monkey saddle: down-degree 3
  const ReebGraph monkey = fixtures::make_graph(
      {{"a", 0}, {"b", 1}, {"c", 2}, {"S", 3}, {"t", 4}},
      {{"a", "S"}, {"b", "S"}, {"c", "S"}, {"S", "t"}});
  const ConditionResult res = split_complex_fork(monkey);
  const ReebGraph& g = res.graph;
  CHECK(g.node_count() == 6);
  CHECK(res.report.inserted == std::vector<std::string>{"S.d1"});
  CHECK(g.kind(g.find_node("S")) == CriticalKind::DownFork);
  CHECK(g.kind(g.find_node("S.d1")) == CriticalKind::DownFork);
  // retention: S keeps its closest lower neighbor, c
  bool s_keeps_c = false;
  for (const ReebGraph::Adj& a : g.neighbors(g.find_node("S")))
    if (g.node(a.to).id == "c") s_keeps_c = true;
  CHECK(s_keeps_c);

  // 1:2 node untouched
  CHECK(split_complex_fork(fixtures::fig1()).report.inserted.empty());

  // 1:5 node becomes a chain of four down-forks
  const ReebGraph five = fixtures::make_graph(
      {{"m1", 0}, {"m2", 1}, {"m3", 2}, {"m4", 3}, {"m5", 4}, {"S", 5}, {"t", 6}},
      {{"m1", "S"}, {"m2", "S"}, {"m3", "S"}, {"m4", "S"}, {"m5", "S"}, {"S", "t"}});
  const ConditionResult chained = split_complex_fork(five);
  CHECK(chained.report.inserted.size() == 3);
  CHECK(validate_conditioned(chained.graph).empty());
  for (const std::string& id : {"S.d1", "S.d2", "S.d3"})
    CHECK(chained.graph.kind(chained.graph.find_node(id)) == CriticalKind::DownFork);
}

TEST_CASE("condition: full pipeline") {
  SUBCASE("already conditioned input is unchanged") {
    const ConditionResult res = condition(fixtures::fig1());
    CHECK(res.report.inserted.empty());
    CHECK(res.report.removed.empty());
    CHECK(res.graph.node_count() == 16);
    CHECK(validate_conditioned(res.graph).empty());
  }

  SUBCASE("mapper-style 0:3 node needs complex then degenerate splits") {
    const ReebGraph raw = fixtures::make_graph(
        {{"a", 0}, {"b", 1}, {"c", 2}, {"X", 3}},
        {{"a", "X"}, {"b", "X"}, {"c", "X"}});
    const ConditionResult res = condition(raw);
    CHECK(validate_conditioned(res.graph).empty());
    CHECK(cycle_rank(res.graph) == 0);
  }

  SUBCASE("random tree n=100 conditions to roughly 2n nodes") {
    GenSpec spec;
    spec.kind = GenKind::Tree;
    spec.n = 100;
    spec.seed = 42;
    const ReebGraph raw = generate(spec);
    CHECK(raw.node_count() == 401);
    const ConditionResult res = condition(raw);
    CHECK(res.graph.node_count() >= 184);  // 204 +- 10%
    CHECK(res.graph.node_count() <= 224);
    CHECK(validate_conditioned(res.graph).empty());
  }

  SUBCASE("errors") {
    ReebGraph empty;
    empty.finalize();
    CHECK_THROWS_AS(condition(empty), std::invalid_argument);

    ReebGraph isolated;
    isolated.add_node("x", 0.0);
    isolated.finalize();
    CHECK_THROWS_AS(condition(isolated), std::invalid_argument);
  }

  SUBCASE("disconnected input conditions per component") {
    const ReebGraph disjoint = fixtures::make_graph(
        {{"a", 0}, {"r", 1}, {"b", 2}, {"c", 3}, {"d", 4}},
        {{"a", "r"}, {"r", "b"}, {"c", "d"}});
    const ConditionResult res = condition(disjoint);
    const auto violations = validate_conditioned(res.graph);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "graph is not connected");

    const auto parts = split_components(disjoint);
    CHECK(parts.size() == 2);
    for (const ReebGraph& part : parts)
      CHECK(validate_conditioned(condition(part).graph).empty());
  }
}

TEST_CASE("condition is idempotent and preserves cycle rank") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const ReebGraph raw = fixtures::messy_graph(rng, 12 + trial % 20, 6);
    if (!raw.connected()) continue;
    const std::size_t rank_before = cycle_rank(raw);
    const ConditionResult once = condition(raw);
    CHECK(cycle_rank(once.graph) == rank_before);

    const ConditionResult twice = condition(once.graph);
    CHECK(twice.report.inserted.empty());
    CHECK(twice.report.removed.empty());
    CHECK(twice.graph.node_count() == once.graph.node_count());
    CHECK(twice.graph.edge_count() == once.graph.edge_count());
    for (NodeIndex v = 0; v < twice.graph.node_count(); ++v)
      CHECK(twice.graph.node(v).id == once.graph.node(v).id);
  }
}

TEST_SUITE_END();
