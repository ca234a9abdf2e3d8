#include "reeb/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace reeb {

const char* to_string(CriticalKind k) {
  switch (k) {
    case CriticalKind::Minimum: return "minimum";
    case CriticalKind::Maximum: return "maximum";
    case CriticalKind::UpFork: return "up-fork";
    case CriticalKind::DownFork: return "down-fork";
    case CriticalKind::Regular: return "regular";
    case CriticalKind::Degenerate: return "degenerate";
  }
  return "?";
}

NodeIndex ReebGraph::add_node(std::string id, double f) {
  if (finalized_) throw std::logic_error("add_node after finalize");
  nodes_.push_back(GraphNode{std::move(id), f, 0, false});
  return static_cast<NodeIndex>(nodes_.size() - 1);
}

NodeIndex ReebGraph::add_node(std::string id, double f, std::int64_t ord, bool synthetic) {
  if (finalized_) throw std::logic_error("add_node after finalize");
  any_explicit_ord_ = true;
  nodes_.push_back(GraphNode{std::move(id), f, ord, synthetic});
  return static_cast<NodeIndex>(nodes_.size() - 1);
}

EdgeIndex ReebGraph::add_edge(NodeIndex a, NodeIndex b) {
  if (finalized_) throw std::logic_error("add_edge after finalize");
  if (a >= nodes_.size() || b >= nodes_.size())
    throw std::out_of_range("edge endpoint does not exist");
  if (a == b) throw std::invalid_argument("self-loop on node '" + nodes_[a].id + "'");
  edges_.push_back(GraphEdge{a, b});
  return static_cast<EdgeIndex>(edges_.size() - 1);
}

void ReebGraph::finalize() {
  if (finalized_) throw std::logic_error("finalize called twice");
  const std::size_t n = nodes_.size();

  id_index_.reserve(n);
  for (NodeIndex v = 0; v < n; ++v) {
    if (!std::isfinite(nodes_[v].f))
      throw std::invalid_argument("non-finite function value on node '" + nodes_[v].id + "'");
    auto [it, fresh] = id_index_.emplace(nodes_[v].id, v);
    if (!fresh) throw std::invalid_argument("duplicate node id '" + nodes_[v].id + "'");
  }

  by_rank_.resize(n);
  std::iota(by_rank_.begin(), by_rank_.end(), NodeIndex{0});
  if (any_explicit_ord_) {
    std::sort(by_rank_.begin(), by_rank_.end(), [&](NodeIndex a, NodeIndex b) {
      return key(a) < key(b);
    });
    for (std::size_t i = 1; i < n; ++i)
      if (key(by_rank_[i - 1]) == key(by_rank_[i]))
        throw std::logic_error("duplicate order key on nodes '" +
                               nodes_[by_rank_[i - 1]].id + "' and '" +
                               nodes_[by_rank_[i]].id + "'");
  } else {
    // Tie-break raw collisions in f by node id (symbolic perturbation).
    std::sort(by_rank_.begin(), by_rank_.end(), [&](NodeIndex a, NodeIndex b) {
      if (nodes_[a].f != nodes_[b].f) return nodes_[a].f < nodes_[b].f;
      return nodes_[a].id < nodes_[b].id;
    });
    for (std::size_t i = 0; i < n; ++i) nodes_[by_rank_[i]].ord = static_cast<std::int64_t>(i);
  }
  rank_.resize(n);
  for (std::uint32_t r = 0; r < n; ++r) rank_[by_rank_[r]] = r;

  // CSR adjacency.
  adj_offset_.assign(n + 1, 0);
  for (const GraphEdge& e : edges_) {
    ++adj_offset_[e.a + 1];
    ++adj_offset_[e.b + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) adj_offset_[i] += adj_offset_[i - 1];
  adj_.resize(edges_.size() * 2);
  std::vector<std::uint32_t> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    adj_[cursor[edges_[e].a]++] = Adj{edges_[e].b, e};
    adj_[cursor[edges_[e].b]++] = Adj{edges_[e].a, e};
  }

  kind_.resize(n);
  finalized_ = true;
  for (NodeIndex v = 0; v < n; ++v) {
    const DegreeSignature d = degrees(v);
    CriticalKind k = CriticalKind::Degenerate;
    if (d.down == 0 && d.up == 1) k = CriticalKind::Minimum;
    else if (d.down == 1 && d.up == 0) k = CriticalKind::Maximum;
    else if (d.down == 1 && d.up == 2) k = CriticalKind::UpFork;
    else if (d.down == 2 && d.up == 1) k = CriticalKind::DownFork;
    else if (d.down == 1 && d.up == 1) k = CriticalKind::Regular;
    kind_[v] = k;
  }
}

void ReebGraph::check_finalized() const {
  if (!finalized_) throw std::logic_error("graph not finalized");
}

NodeIndex ReebGraph::find_node(std::string_view id) const {
  auto it = id_index_.find(id);
  return it == id_index_.end() ? invalid_node : it->second;
}

std::span<const ReebGraph::Adj> ReebGraph::neighbors(NodeIndex v) const {
  return {adj_.data() + adj_offset_[v], adj_.data() + adj_offset_[v + 1]};
}

NodeIndex ReebGraph::lower_end(EdgeIndex e) const {
  const GraphEdge& ge = edges_[e];
  return rank_[ge.a] < rank_[ge.b] ? ge.a : ge.b;
}

NodeIndex ReebGraph::upper_end(EdgeIndex e) const {
  const GraphEdge& ge = edges_[e];
  return rank_[ge.a] < rank_[ge.b] ? ge.b : ge.a;
}

DegreeSignature ReebGraph::degrees(NodeIndex v) const {
  check_finalized();
  DegreeSignature d;
  for (const Adj& a : neighbors(v)) {
    if (rank_[a.to] > rank_[v]) ++d.up;
    else ++d.down;
  }
  return d;
}

bool ReebGraph::connected() const {
  check_finalized();
  if (nodes_.empty()) return true;
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<NodeIndex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    for (const Adj& a : neighbors(v)) {
      if (!seen[a.to]) {
        seen[a.to] = true;
        ++reached;
        stack.push_back(a.to);
      }
    }
  }
  return reached == nodes_.size();
}

ReebGraph ReebGraph::negated() const {
  check_finalized();
  ReebGraph m;
  for (const GraphNode& nd : nodes_) m.add_node(nd.id, -nd.f, -nd.ord, nd.synthetic);
  for (const GraphEdge& e : edges_) m.add_edge(e.a, e.b);
  m.finalize();
  return m;
}

std::uint64_t ReebGraph::content_hash() const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  auto mix_bytes = [&h](const void* p, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ull;
    }
  };
  auto mix_u64 = [&](std::uint64_t x) { mix_bytes(&x, sizeof x); };
  mix_u64(nodes_.size());
  for (const GraphNode& nd : nodes_) {
    mix_bytes(nd.id.data(), nd.id.size());
    std::uint64_t bits;
    std::memcpy(&bits, &nd.f, sizeof bits);
    mix_u64(bits);
    mix_u64(static_cast<std::uint64_t>(nd.ord));
    mix_u64(nd.synthetic ? 1 : 0);
  }
  mix_u64(edges_.size());
  for (const GraphEdge& e : edges_) {
    mix_u64(e.a);
    mix_u64(e.b);
  }
  return h;
}

CriticalKind classify_node(const ReebGraph& g, NodeIndex v) {
  if (v >= g.node_count()) throw std::out_of_range("unknown node index");
  return g.kind(v);
}

std::vector<Violation> validate_conditioned(const ReebGraph& g) {
  std::vector<Violation> out;
  if (g.node_count() == 0) {
    out.push_back({"", "graph is empty"});
    return out;
  }
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    const CriticalKind k = g.kind(v);
    if (k == CriticalKind::Regular)
      out.push_back({g.node(v).id, "regular node (1:1)"});
    else if (k == CriticalKind::Degenerate) {
      const DegreeSignature d = g.degrees(v);
      out.push_back({g.node(v).id, "degenerate node (down " + std::to_string(d.down) +
                                       ", up " + std::to_string(d.up) + ")"});
    }
  }
  if (!g.connected()) out.push_back({"", "graph is not connected"});
  return out;
}

bool is_conditioned(const ReebGraph& g) { return validate_conditioned(g).empty(); }

std::size_t cycle_rank(const ReebGraph& g) {
  if (!g.connected()) throw std::invalid_argument("cycle_rank requires a connected graph");
  return g.edge_count() - g.node_count() + 1;
}

}  // namespace reeb
