#pragma once

#include <cstdint>
#include <vector>

#include "reeb/diagram.hpp"
#include "reeb/graph.hpp"

namespace reeb {

/// Brute-force pairing used as ground truth on small graphs. Works straight
/// from the definitions: per-fork component searches over strict sub/super
/// level sets for the ordinary pairs, exhaustive simple-cycle enumeration for
/// the essential pairs. Deliberately independent of the production engines.
struct OracleLimits {
  std::size_t max_nodes = 200;
  std::size_t cycle_budget = 1'000'000;  // DFS edge extensions
};

/// A simple cycle; nodes in traversal order. top/bottom are the extremal
/// nodes under the total order (bottom is always the enumeration anchor).
struct SimpleCycle {
  std::vector<NodeIndex> nodes;
  NodeIndex top = invalid_node;
  NodeIndex bottom = invalid_node;
};

/// All simple cycles of the (multi)graph, each reported exactly once.
/// Throws std::runtime_error when the extension budget is exhausted.
std::vector<SimpleCycle> enumerate_simple_cycles(const ReebGraph& g, std::size_t budget);

/// MinSaddle + SaddleMax pairs of the ordinary forks plus the global pair.
std::vector<PersistencePair> oracle_ordinary(const ReebGraph& g);

/// One Cycle pair per essential down-fork: among simple cycles whose top is
/// the fork, take the one with the highest bottom.
std::vector<PersistencePair> oracle_essential(const ReebGraph& g,
                                              const OracleLimits& lim = {});

PersistenceDiagram oracle_diagram(const ReebGraph& g, const OracleLimits& lim = {});

}  // namespace reeb
