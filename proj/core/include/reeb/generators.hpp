#pragma once

#include <cstdint>

#include "reeb/graph.hpp"

namespace reeb {

enum class GenKind : std::uint8_t { Tree, Graph };
enum class TreeMode : std::uint8_t { Split, Join };

/// Synthetic input description. Generation is a pure function of the spec:
/// the engine is mt19937_64 seeded with `seed`, uniform doubles are taken as
/// (x >> 11) * 2^-53 and bounded picks as x % n, so outputs are identical
/// across platforms.
struct GenSpec {
  GenKind kind = GenKind::Tree;
  std::uint32_t n = 1;  // iterations; the result has 4n+1 nodes
  std::uint64_t seed = 0;
  double p2 = 0.5;  // probability of a two-point gluing (graph kind)
  TreeMode tree_mode = TreeMode::Split;
};

/// Grows a graph from a seed node by attaching one 4-node fork per iteration
/// (a 3-valent hub with three tips), gluing 1 tip (trees; graphs with
/// probability 1-p2) or 2 tips (graphs, probability p2) to existing 1-valent
/// nodes. Tree values make every hub an up-fork (split mode) or a down-fork
/// (join); graph values are drawn i.i.d. uniform per node. The output is not
/// conditioned.
ReebGraph generate(const GenSpec& spec);

/// Removes k edges, each drawn uniformly from the non-bridge edges remaining
/// at that moment, then re-conditions. The cycle rank drops by exactly k.
/// Throws std::invalid_argument when k exceeds the cycle rank.
ReebGraph cut_cycles(const ReebGraph& conditioned, std::size_t k, std::uint64_t seed);

}  // namespace reeb
