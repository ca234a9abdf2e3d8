#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace reeb {

using NodeIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;
inline constexpr NodeIndex invalid_node = std::numeric_limits<NodeIndex>::max();
inline constexpr EdgeIndex invalid_edge = std::numeric_limits<EdgeIndex>::max();

/// Strict total order over nodes: function value first, then an ordinal that
/// breaks ties. Conditioning places synthetic nodes between existing keys by
/// assigning intermediate ordinals at the same nominal f.
struct OrderKey {
  double f = 0.0;
  std::int64_t ord = 0;

  friend bool operator<(const OrderKey& a, const OrderKey& b) {
    if (a.f != b.f) return a.f < b.f;
    return a.ord < b.ord;
  }
  friend bool operator==(const OrderKey& a, const OrderKey& b) {
    return a.f == b.f && a.ord == b.ord;
  }
};

enum class CriticalKind : std::uint8_t {
  Minimum,
  Maximum,
  UpFork,
  DownFork,
  Regular,
  Degenerate,
};

const char* to_string(CriticalKind k);

struct DegreeSignature {
  int up = 0;
  int down = 0;
};

struct GraphNode {
  std::string id;
  double f = 0.0;
  std::int64_t ord = 0;
  bool synthetic = false;  // inserted by conditioning
};

struct GraphEdge {
  NodeIndex a = invalid_node;
  NodeIndex b = invalid_node;
};

/// An undirected multigraph whose nodes carry scalar values. Parallel edges
/// are permitted, self-loops are not. Construction is two-phase: add nodes
/// and edges, then finalize(). A finalized graph is immutable and safe to
/// share across threads.
class ReebGraph {
 public:
  struct Adj {
    NodeIndex to = invalid_node;
    EdgeIndex edge = invalid_edge;
  };

  ReebGraph() = default;

  /// Adds a node whose tie-break ordinal is derived from its id at finalize().
  NodeIndex add_node(std::string id, double f);
  /// Adds a node with an explicit ordinal (conditioning / derived graphs).
  NodeIndex add_node(std::string id, double f, std::int64_t ord, bool synthetic);
  EdgeIndex add_edge(NodeIndex a, NodeIndex b);

  /// Validates ids/values, computes the total order, adjacency and node
  /// classification. Must be called exactly once before any query below.
  void finalize();
  bool finalized() const { return finalized_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const GraphNode& node(NodeIndex v) const { return nodes_[v]; }
  const GraphEdge& edge(EdgeIndex e) const { return edges_[e]; }

  /// Index lookup by external id; invalid_node when absent.
  NodeIndex find_node(std::string_view id) const;

  // TotalOrder queries.
  std::uint32_t rank(NodeIndex v) const { return rank_[v]; }
  NodeIndex at_rank(std::uint32_t r) const { return by_rank_[r]; }
  bool before(NodeIndex a, NodeIndex b) const { return rank_[a] < rank_[b]; }
  OrderKey key(NodeIndex v) const { return {nodes_[v].f, nodes_[v].ord}; }

  std::span<const Adj> neighbors(NodeIndex v) const;
  NodeIndex lower_end(EdgeIndex e) const;
  NodeIndex upper_end(EdgeIndex e) const;

  DegreeSignature degrees(NodeIndex v) const;
  CriticalKind kind(NodeIndex v) const { return kind_[v]; }

  bool connected() const;

  /// Mirror graph: same nodes and edges with the total order reversed.
  /// Minima become maxima, up-forks become down-forks.
  ReebGraph negated() const;

  /// Stable content hash over ids, values, ordinals and edges (provenance).
  std::uint64_t content_hash() const;

 private:
  void check_finalized() const;

  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
  bool any_explicit_ord_ = false;
  bool finalized_ = false;

  struct IdHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::uint32_t> rank_;
  std::vector<NodeIndex> by_rank_;
  std::vector<std::uint32_t> adj_offset_;
  std::vector<Adj> adj_;
  std::vector<CriticalKind> kind_;
  std::unordered_map<std::string, NodeIndex, IdHash, std::equal_to<>> id_index_;
};

/// Classification of a single node per the degree table; throws
/// std::out_of_range for an unknown node.
CriticalKind classify_node(const ReebGraph& g, NodeIndex v);

struct Violation {
  std::string node;  // empty for graph-level violations
  std::string rule;
};

/// Empty result iff every node is a minimum, maximum, binary up-fork or
/// binary down-fork, and the graph is connected and non-empty.
std::vector<Violation> validate_conditioned(const ReebGraph& g);

bool is_conditioned(const ReebGraph& g);

/// E - V + 1 for a connected graph; throws std::invalid_argument otherwise.
std::size_t cycle_rank(const ReebGraph& g);

}  // namespace reeb
