#pragma once

#include <map>
#include <string>
#include <vector>

#include "reeb/graph.hpp"

namespace reeb {

/// What conditioning did: inserted synthetic nodes, removed regular nodes,
/// and the original-id -> surviving-id map (removed nodes map to nothing;
/// all other survivors keep their id).
struct ConditioningReport {
  std::vector<std::string> inserted;
  std::vector<std::string> removed;
  std::map<std::string, std::string> mapping;

  void merge(const ConditioningReport& other);
};

struct ConditionResult {
  ReebGraph graph;
  ConditioningReport report;
};

/// Full pipeline: split complex forks, split double forks, split degenerate
/// extrema, remove regular nodes; repeated to fixpoint. The result passes
/// validate_conditioned except possibly for connectivity. Throws
/// std::invalid_argument on an empty graph or on isolated (0:0) nodes.
ConditionResult condition(const ReebGraph& g);

// The individual corrections, each applied once over the whole graph.
ConditionResult remove_regular(const ReebGraph& g);
ConditionResult split_degenerate_extremum(const ReebGraph& g);
ConditionResult split_double_fork(const ReebGraph& g);
ConditionResult split_complex_fork(const ReebGraph& g);

/// Connected components as separate graphs (node/edge order preserved),
/// for processing multi-component inputs individually.
std::vector<ReebGraph> split_components(const ReebGraph& g);

}  // namespace reeb
