// Cross-engine properties on randomized inputs: engine/oracle equality,
// negation symmetry, perfect matching, cycle counts.

#include "doctest.h"
#include "fixtures.hpp"
#include "reeb/condition.hpp"
#include "reeb/generators.hpp"
#include "reeb/multipass.hpp"
#include "reeb/oracle.hpp"
#include "reeb/singlepass.hpp"

using namespace reeb;

namespace {

PersistenceDiagram run_engine(const std::string& name, const ReebGraph& g) {
  if (name == "multipass") return pair_multipass(g);
  if (name == "asc") return pair_singlepass(g, SinglePassOptions{SweepMode::Ascending, true});
  return pair_singlepass(g, SinglePassOptions{SweepMode::Descending, true});
}

}  // namespace

TEST_SUITE_BEGIN("properties");

TEST_CASE("all engines equal the oracle; diagrams are perfect matchings") {
  std::mt19937_64 rng(555);
  int tested = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const ReebGraph raw = trial % 2 == 0
                              ? fixtures::messy_graph(rng, 8 + trial % 16, 6)
                              : generate([&] {
                                  GenSpec s;
                                  s.kind = GenKind::Graph;
                                  s.n = 4 + trial % 12;
                                  s.seed = static_cast<std::uint64_t>(trial);
                                  return s;
                                }());
    if (!raw.connected()) continue;
    const ReebGraph g = condition(raw).graph;
    const PersistenceDiagram od = oracle_diagram(g);
    CHECK(check_diagram(od, g).empty());

    std::size_t cycles = 0;
    for (const PersistencePair& p : od.pairs)
      if (p.cls == PairClass::Cycle) ++cycles;
    CHECK(cycles == cycle_rank(g));

    for (const char* engine : {"multipass", "asc", "desc"}) {
      const PersistenceDiagram d = run_engine(engine, g);
      const std::string diff = fixtures::first_difference(d, od, g);
      CHECK_MESSAGE(diff.empty(), engine, " trial ", trial, ": ", diff);
      CHECK(check_diagram(d, g).empty());
    }
    ++tested;
  }
  CHECK(tested >= 100);
}

TEST_CASE("negation symmetry for every engine") {
  std::mt19937_64 rng(808);
  int tested = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const ReebGraph raw = fixtures::messy_graph(rng, 10 + trial % 12, 5);
    if (!raw.connected()) continue;
    const ReebGraph g = condition(raw).graph;
    const ReebGraph m = g.negated();
    REQUIRE(is_conditioned(m));

    for (const char* engine : {"multipass", "asc", "desc"}) {
      const PersistenceDiagram d = run_engine(engine, g);
      const PersistenceDiagram dm = run_engine(engine, m);

      // Map the mirrored diagram back: classes swap, cycle/global pairs flip
      // their endpoints. Node indices agree between g and its negation.
      PersistenceDiagram mapped;
      for (const PersistencePair& p : dm.pairs) {
        if (p.global || p.cls == PairClass::Cycle)
          mapped.pairs.push_back(make_pair(g, p.death, p.birth, p.cls, p.global));
        else if (p.cls == PairClass::MinSaddle)
          mapped.pairs.push_back(make_pair(g, p.birth, p.death, PairClass::SaddleMax));
        else
          mapped.pairs.push_back(make_pair(g, p.birth, p.death, PairClass::MinSaddle));
      }
      const std::string diff = fixtures::first_difference(mapped, d, g);
      CHECK_MESSAGE(diff.empty(), engine, ": ", diff);
    }
    ++tested;
  }
  CHECK(tested >= 25);
}

TEST_CASE("trees: no cycle pairs, engines agree") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenSpec spec;
    spec.kind = GenKind::Tree;
    spec.n = 30;
    spec.seed = seed;
    spec.tree_mode = seed % 2 == 0 ? TreeMode::Split : TreeMode::Join;
    const ReebGraph g = condition(generate(spec)).graph;
    const PersistenceDiagram od = oracle_diagram(g);
    for (const PersistencePair& p : od.pairs) CHECK(p.cls != PairClass::Cycle);
    for (const char* engine : {"multipass", "asc", "desc"}) {
      const std::string diff = fixtures::first_difference(run_engine(engine, g), od, g);
      CHECK_MESSAGE(diff.empty(), engine, " seed ", seed, ": ", diff);
    }
  }
}

TEST_SUITE_END();
