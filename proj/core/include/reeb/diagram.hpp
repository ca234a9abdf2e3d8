#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "reeb/graph.hpp"

namespace reeb {

enum class PairClass : std::uint8_t { MinSaddle, SaddleMax, Cycle };

const char* to_string(PairClass c);

/// One critical-point pair, stored as nodes rather than coordinates:
///   MinSaddle: birth = minimum, death = down-fork (the global min/max pair
///              is recorded here too, flagged global).
///   SaddleMax: birth = maximum, death = up-fork.
///   Cycle:     birth = down-fork, death = up-fork (death below birth).
struct PersistencePair {
  NodeIndex birth = invalid_node;
  NodeIndex death = invalid_node;
  PairClass cls = PairClass::MinSaddle;
  bool synthetic = false;  // either endpoint was inserted by conditioning
  bool global = false;     // the global min/max pair
};

struct PersistenceDiagram {
  std::vector<PersistencePair> pairs;
  std::string algorithm;        // provenance
  std::uint64_t input_hash = 0; // content hash of the paired graph
};

PersistencePair make_pair(const ReebGraph& g, NodeIndex birth, NodeIndex death,
                          PairClass cls, bool global = false);

/// Graph-independent row form used for canonical ordering, serialization and
/// diffing.
struct DiagramRow {
  PairClass cls = PairClass::MinSaddle;
  std::string birth_id;
  std::string death_id;
  double birth_f = 0.0;
  double death_f = 0.0;
  bool synthetic = false;
  bool global = false;

  friend bool operator==(const DiagramRow&, const DiagramRow&) = default;
};

bool row_less(const DiagramRow& a, const DiagramRow& b);

/// Rows in canonical order: (class, birth f, death f, birth id, death id).
std::vector<DiagramRow> diagram_rows(const PersistenceDiagram& d, const ReebGraph& g);

struct DiagramDiff {
  std::vector<DiagramRow> only_a;
  std::vector<DiagramRow> only_b;
  bool empty() const { return only_a.empty() && only_b.empty(); }
};

/// Multiset symmetric difference after canonical sort; empty means equal.
DiagramDiff diagram_diff(std::vector<DiagramRow> a, std::vector<DiagramRow> b);
DiagramDiff diagram_diff(const PersistenceDiagram& a, const PersistenceDiagram& b,
                         const ReebGraph& g);

/// Checks the perfect-matching invariant on a conditioned graph: every
/// critical node appears in exactly one pair, classes are consistent with
/// node kinds, and the number of cycle pairs equals the cycle rank.
/// Returns human-readable problems; empty means the diagram is sound.
std::vector<std::string> check_diagram(const PersistenceDiagram& d, const ReebGraph& g);

}  // namespace reeb
