#pragma once

#include <cstdint>

#include "reeb/diagram.hpp"
#include "reeb/graph.hpp"

namespace reeb {

enum class SweepDirection : std::uint8_t { Ascending, Descending };
enum class SweepMode : std::uint8_t { Auto, Ascending, Descending };

struct SinglePassOptions {
  SweepMode mode = SweepMode::Auto;
  /// Disabling virtual edges reproduces the basic algorithm's failure mode on
  /// cyclic inputs; the result may then disagree with the other engines or
  /// leave nodes unpaired. Testing only.
  bool virtual_edges = true;
};

struct SinglePassStats {
  std::size_t label_insertions = 0;
  std::size_t vedges_created = 0;
  std::size_t vedges_merged = 0;
  std::size_t label_crossings = 0;
  std::size_t max_alive_vedges = 0;
};

/// Auto mode sweeps descending iff up-forks outnumber down-forks (fewer
/// virtual edges that way); ties sweep ascending.
SweepDirection choose_sweep_direction(const ReebGraph& g, SweepMode mode);

PersistenceDiagram pair_singlepass(const ReebGraph& g,
                                   const SinglePassOptions& opt = {},
                                   SinglePassStats* stats = nullptr);

}  // namespace reeb
