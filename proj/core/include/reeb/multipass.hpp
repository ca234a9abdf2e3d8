#pragma once

#include <array>
#include <vector>

#include "reeb/diagram.hpp"
#include "reeb/graph.hpp"

namespace reeb {

enum class TreeSide : std::uint8_t { Join, Split };

/// Join or split tree of a conditioned Reeb graph. Leaves are the minima
/// (join) or maxima (split); interior nodes are the ordinary forks of that
/// direction, each merging exactly two components. Essential forks do not
/// appear. All links live on graph node indices.
struct MergeTree {
  TreeSide side = TreeSide::Join;
  NodeIndex root = invalid_node;  // the single leaf when there is no fork
  std::vector<NodeIndex> leaves;
  std::vector<NodeIndex> interior;                 // in merge order
  std::vector<std::array<NodeIndex, 2>> children;  // per graph node
  std::vector<NodeIndex> parent;                   // per graph node
  std::vector<char> member;

  bool contains(NodeIndex v) const { return member[v] != 0; }
  bool is_leaf(NodeIndex v) const {
    return member[v] && children[v][0] == invalid_node;
  }
};

MergeTree build_merge_tree(const ReebGraph& g, TreeSide side);

/// Stack operations of the branch-decomposition pairing:
///   T1 expands a fork, T2 swaps a leaf over a fork, T3 pairs a fork with
///   the closer of two collapsed leaves.
enum class StackOp : std::uint8_t { T1, T2, T3 };
const char* to_string(StackOp op);

struct MergeTreePairing {
  std::vector<PersistencePair> pairs;  // MinSaddle (join) or SaddleMax (split)
  NodeIndex survivor = invalid_node;   // global min (join) / max (split)
  std::vector<StackOp> trace;
};

/// Pairs every interior fork of the tree with an extremum. The
/// `first_child_on_top` flag selects which stored child lands on top of the
/// stack during expansion; the produced pairs do not depend on it.
MergeTreePairing pair_merge_tree(const ReebGraph& g, const MergeTree& tree,
                                 bool first_child_on_top = true);

PersistencePair pair_global(const ReebGraph& g, NodeIndex min_survivor,
                            NodeIndex max_survivor);

/// Superlevel-set sweep for one essential up-fork: splits s into two legs and
/// returns the down-fork that first joins them.
NodeIndex pair_essential_upfork(const ReebGraph& g, NodeIndex s);

PersistenceDiagram pair_multipass(const ReebGraph& g);

}  // namespace reeb
