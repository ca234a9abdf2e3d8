#include "doctest.h"
#include "fixtures.hpp"
#include "reeb/condition.hpp"
#include "reeb/multipass.hpp"
#include "reeb/oracle.hpp"

using namespace reeb;

namespace {

std::vector<std::string> pair_names(const std::vector<PersistencePair>& pairs,
                                    const ReebGraph& g) {
  std::vector<std::string> out;
  for (const PersistencePair& p : pairs)
    out.push_back(g.node(p.birth).id + "/" + g.node(p.death).id);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("multipass");

TEST_CASE("fig1 join tree structure") {
  const ReebGraph g = fixtures::fig1();
  const MergeTree t = build_merge_tree(g, TreeSide::Join);

  CHECK(g.node(t.root).id == "K");
  REQUIRE(t.leaves.size() == 4);
  CHECK(t.interior.size() == 3);

  auto child_ids = [&](const char* id) {
    const auto& ch = t.children[g.find_node(id)];
    std::vector<std::string> ids{g.node(ch[0]).id, g.node(ch[1]).id};
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  CHECK(child_ids("K") == std::vector<std::string>{"G", "H"});
  CHECK(child_ids("G") == std::vector<std::string>{"C", "E"});
  CHECK(child_ids("C") == std::vector<std::string>{"A", "B"});

  // essential down-forks J, L, M stay out
  for (const char* id : {"J", "L", "M"}) CHECK_FALSE(t.contains(g.find_node(id)));
}

TEST_CASE("fig1 split tree structure") {
  const ReebGraph g = fixtures::fig1();
  const MergeTree t = build_merge_tree(g, TreeSide::Split);
  CHECK(g.node(t.root).id == "N");
  CHECK(t.interior.size() == 1);
  REQUIRE(t.leaves.size() == 2);
  std::vector<std::string> leaf_ids{g.node(t.leaves[0]).id, g.node(t.leaves[1]).id};
  std::sort(leaf_ids.begin(), leaf_ids.end());
  CHECK(leaf_ids == std::vector<std::string>{"O", "P"});
  // essential up-forks D, F, I stay out
  for (const char* id : {"D", "F", "I"}) CHECK_FALSE(t.contains(g.find_node(id)));
}

TEST_CASE("monotone path yields a single-leaf tree") {
  const ReebGraph g = fixtures::make_graph({{"lo", 0}, {"hi", 1}}, {{"lo", "hi"}});
  const MergeTree t = build_merge_tree(g, TreeSide::Join);
  CHECK(t.interior.empty());
  CHECK(t.root == g.find_node("lo"));

  const MergeTreePairing p = pair_merge_tree(g, t);
  CHECK(p.pairs.empty());
  CHECK(p.trace.empty());
  CHECK(p.survivor == g.find_node("lo"));
}

TEST_CASE("fig1 join-tree pairing: pairs, survivor and exact stack trace") {
  const ReebGraph g = fixtures::fig1();
  const MergeTreePairing p = pair_merge_tree(g, build_merge_tree(g, TreeSide::Join));

  CHECK(pair_names(p.pairs, g) ==
        std::vector<std::string>{"B/C", "E/G", "H/K"});
  CHECK(g.node(p.survivor).id == "A");

  const std::vector<StackOp> expected{StackOp::T1, StackOp::T2, StackOp::T1,
                                      StackOp::T1, StackOp::T3, StackOp::T3,
                                      StackOp::T3};
  CHECK(p.trace == expected);
  for (const PersistencePair& pr : p.pairs) CHECK(pr.cls == PairClass::MinSaddle);
}

TEST_CASE("fig1 split-tree pairing") {
  const ReebGraph g = fixtures::fig1();
  const MergeTreePairing p = pair_merge_tree(g, build_merge_tree(g, TreeSide::Split));
  CHECK(pair_names(p.pairs, g) == std::vector<std::string>{"O/N"});
  CHECK(g.node(p.survivor).id == "P");
  CHECK(p.pairs[0].cls == PairClass::SaddleMax);
}

TEST_CASE("push order does not change the pairs") {
  const ReebGraph g = fixtures::fig1();
  for (TreeSide side : {TreeSide::Join, TreeSide::Split}) {
    const MergeTree t = build_merge_tree(g, side);
    const MergeTreePairing a = pair_merge_tree(g, t, true);
    const MergeTreePairing b = pair_merge_tree(g, t, false);
    CHECK(pair_names(a.pairs, g) == pair_names(b.pairs, g));
    CHECK(a.survivor == b.survivor);
  }
}

TEST_CASE("pair_global") {
  const ReebGraph g = fixtures::fig1();
  const PersistencePair p = pair_global(g, g.find_node("A"), g.find_node("P"));
  CHECK(p.global);
  CHECK(p.cls == PairClass::MinSaddle);
  CHECK_THROWS_AS(pair_global(g, g.find_node("B"), g.find_node("P")),
                  std::invalid_argument);

  // negation swaps the roles
  const ReebGraph m = g.negated();
  const PersistencePair q = pair_global(m, m.find_node("P"), m.find_node("A"));
  CHECK(m.node(q.birth).id == "P");
  CHECK(m.node(q.death).id == "A");
}

TEST_CASE("essential up-fork sweeps on fig1") {
  const ReebGraph g = fixtures::fig1();
  CHECK(g.node(pair_essential_upfork(g, g.find_node("D"))).id == "L");
  CHECK(g.node(pair_essential_upfork(g, g.find_node("F"))).id == "J");
  CHECK(g.node(pair_essential_upfork(g, g.find_node("I"))).id == "M");
}

TEST_CASE("essential sweep on the conditioned double edge") {
  ReebGraph raw;
  raw.add_node("A", 0.0);
  raw.add_node("B", 1.0);
  raw.add_edge(0, 1);
  raw.add_edge(0, 1);
  raw.finalize();
  const ReebGraph g = condition(raw).graph;
  CHECK(g.node(pair_essential_upfork(g, g.find_node("A"))).id == "B");
}

TEST_CASE("pair_multipass matches the fixture and the oracle") {
  const ReebGraph g = fixtures::fig1();
  const PersistenceDiagram d = pair_multipass(g);
  CHECK(diagram_rows(d, g) == fixtures::fig1_rows());
  CHECK(check_diagram(d, g).empty());

  // single edge: just the global pair
  const ReebGraph edge = fixtures::make_graph({{"A", 0}, {"B", 1}}, {{"A", "B"}});
  const PersistenceDiagram ed = pair_multipass(edge);
  REQUIRE(ed.pairs.size() == 1);
  CHECK(ed.pairs[0].global);

  // refuse unconditioned input
  const ReebGraph path = fixtures::make_graph({{"a", 0}, {"r", 1}, {"b", 2}},
                                              {{"a", "r"}, {"r", "b"}});
  CHECK_THROWS_AS(pair_multipass(path), std::invalid_argument);
}

TEST_CASE("mirror property: split pipeline on -f equals join pipeline on f") {
  const ReebGraph g = fixtures::fig1();
  const ReebGraph m = g.negated();
  const MergeTreePairing join_f = pair_merge_tree(g, build_merge_tree(g, TreeSide::Join));
  const MergeTreePairing split_m = pair_merge_tree(m, build_merge_tree(m, TreeSide::Split));
  // same node pairs, mirrored classes
  CHECK(pair_names(join_f.pairs, g) == pair_names(split_m.pairs, m));
  CHECK(join_f.survivor == split_m.survivor);
}

TEST_CASE("random graphs agree with the oracle") {
  std::mt19937_64 rng(123);
  int tested = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const ReebGraph raw = fixtures::messy_graph(rng, 10 + trial % 14, 5);
    if (!raw.connected()) continue;
    const ReebGraph g = condition(raw).graph;
    const PersistenceDiagram mp = pair_multipass(g);
    const PersistenceDiagram od = oracle_diagram(g);
    const std::string diff = fixtures::first_difference(mp, od, g);
    CHECK_MESSAGE(diff.empty(), diff);
    ++tested;
  }
  CHECK(tested > 40);
}

TEST_SUITE_END();
