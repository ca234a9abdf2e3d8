#include "reeb/condition.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace reeb {

void ConditioningReport::merge(const ConditioningReport& other) {
  inserted.insert(inserted.end(), other.inserted.begin(), other.inserted.end());
  removed.insert(removed.end(), other.removed.begin(), other.removed.end());
  for (const auto& [k, v] : other.mapping) mapping[k] = v;
}

namespace {

// Ordinal spacing between consecutive nodes after each renormalization.
// Synthetic nodes take offsets inside the gap; one pass never inserts more
// than the maximum node degree of offsets around a single source.
constexpr std::int64_t kOrdGap = std::int64_t{1} << 20;

struct WorkNode {
  std::string id;
  double f = 0.0;
  std::int64_t ord = 0;
  bool synthetic = false;
  bool alive = true;
};

struct WorkEdge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  bool alive = true;
};

// Mutable graph the conditioning passes operate on. Node order is tracked
// with explicit ordinals; renormalize() re-spaces them between passes so a
// later pass can again insert nodes immediately next to any source.
class Conditioner {
 public:
  explicit Conditioner(const ReebGraph& g) {
    nodes_.reserve(g.node_count());
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      const GraphNode& nd = g.node(v);
      nodes_.push_back(WorkNode{nd.id, nd.f,
                                static_cast<std::int64_t>(g.rank(v)) * kOrdGap,
                                nd.synthetic});
      used_ids_.insert(nd.id);
    }
    edges_.reserve(g.edge_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
      edges_.push_back(WorkEdge{g.edge(e).a, g.edge(e).b});
  }

  bool pass_complex_fork(ConditioningReport& rep) {
    build_incidence();
    bool changed = false;
    const std::size_t original = nodes_.size();
    for (std::uint32_t v = 0; v < original; ++v) {
      if (!nodes_[v].alive) continue;
      changed |= split_chain(v, /*down_side=*/true, rep);
      changed |= split_chain(v, /*down_side=*/false, rep);
    }
    return changed;
  }

  bool pass_double_fork(ConditioningReport& rep) {
    build_incidence();
    bool changed = false;
    const std::size_t original = nodes_.size();
    for (std::uint32_t v = 0; v < original; ++v) {
      if (!nodes_[v].alive) continue;
      auto [down, up] = split_edges(v);
      if (down.size() != 2 || up.size() != 2) continue;
      const std::uint32_t w =
          new_node(fresh_id(nodes_[v].id + ".s"), nodes_[v].f, nodes_[v].ord + 1, rep);
      for (std::uint32_t e : up) repoint(e, v, w);
      link(v, w);
      changed = true;
    }
    return changed;
  }

  bool pass_degenerate_extremum(ConditioningReport& rep) {
    build_incidence();
    bool changed = false;
    const std::size_t original = nodes_.size();
    for (std::uint32_t v = 0; v < original; ++v) {
      if (!nodes_[v].alive) continue;
      auto [down, up] = split_edges(v);
      if (down.size() == 2 && up.empty()) {
        // Degenerate maximum: becomes a down-fork with a new maximum above.
        const std::uint32_t w = new_node(fresh_id(nodes_[v].id + ".max"), nodes_[v].f,
                                         nodes_[v].ord + 1, rep);
        link(v, w);
        changed = true;
      } else if (up.size() == 2 && down.empty()) {
        const std::uint32_t w = new_node(fresh_id(nodes_[v].id + ".min"), nodes_[v].f,
                                         nodes_[v].ord - 1, rep);
        link(v, w);
        changed = true;
      }
    }
    return changed;
  }

  bool pass_remove_regular(ConditioningReport& rep) {
    build_incidence();
    bool changed = false;
    for (std::uint32_t v = 0; v < nodes_.size(); ++v) {
      if (!nodes_[v].alive) continue;
      auto [down, up] = split_edges(v);
      if (down.size() != 1 || up.size() != 1) continue;
      // Splice: the lower edge is re-pointed past v, the upper edge dies.
      repoint(down[0], v, other_end(up[0], v));
      edges_[up[0]].alive = false;
      nodes_[v].alive = false;
      rep.removed.push_back(nodes_[v].id);
      changed = true;
    }
    return changed;
  }

  void renormalize() {
    std::vector<std::uint32_t> order;
    for (std::uint32_t v = 0; v < nodes_.size(); ++v)
      if (nodes_[v].alive) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return key(a) < key(b);
    });
    for (std::size_t r = 0; r < order.size(); ++r)
      nodes_[order[r]].ord = static_cast<std::int64_t>(r) * kOrdGap;
  }

  ReebGraph build() const {
    ReebGraph out;
    std::vector<NodeIndex> remap(nodes_.size(), invalid_node);
    for (std::uint32_t v = 0; v < nodes_.size(); ++v) {
      if (!nodes_[v].alive) continue;
      remap[v] = out.add_node(nodes_[v].id, nodes_[v].f, nodes_[v].ord, nodes_[v].synthetic);
    }
    for (const WorkEdge& e : edges_)
      if (e.alive) out.add_edge(remap[e.a], remap[e.b]);
    out.finalize();
    return out;
  }

 private:
  OrderKey key(std::uint32_t v) const { return {nodes_[v].f, nodes_[v].ord}; }

  std::uint32_t other_end(std::uint32_t e, std::uint32_t v) const {
    return edges_[e].a == v ? edges_[e].b : edges_[e].a;
  }

  void repoint(std::uint32_t e, std::uint32_t from, std::uint32_t to) {
    if (edges_[e].a == from) edges_[e].a = to;
    else edges_[e].b = to;
    incident_[to].push_back(e);
    // stale entry remains under `from`; passes rebuild incidence anyway
  }

  void link(std::uint32_t a, std::uint32_t b) {
    edges_.push_back(WorkEdge{a, b});
    const std::uint32_t e = static_cast<std::uint32_t>(edges_.size() - 1);
    incident_[a].push_back(e);
    incident_[b].push_back(e);
  }

  std::uint32_t new_node(std::string id, double f, std::int64_t ord,
                         ConditioningReport& rep) {
    rep.inserted.push_back(id);
    nodes_.push_back(WorkNode{std::move(id), f, ord, /*synthetic=*/true});
    incident_.emplace_back();
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  std::string fresh_id(std::string base) {
    while (used_ids_.count(base)) base += "'";
    used_ids_.insert(base);
    return base;
  }

  void build_incidence() {
    incident_.assign(nodes_.size(), {});
    for (std::uint32_t e = 0; e < edges_.size(); ++e) {
      if (!edges_[e].alive) continue;
      incident_[edges_[e].a].push_back(e);
      incident_[edges_[e].b].push_back(e);
    }
  }

  // Alive incident edges of v, partitioned into (down, up) by the order key.
  std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> split_edges(
      std::uint32_t v) {
    std::vector<std::uint32_t> down, up;
    // Compact the incidence list while scanning it.
    auto& inc = incident_[v];
    std::vector<std::uint32_t> keep;
    for (std::uint32_t e : inc) {
      if (!edges_[e].alive || (edges_[e].a != v && edges_[e].b != v)) continue;
      keep.push_back(e);
      (key(other_end(e, v)) < key(v) ? down : up).push_back(e);
    }
    inc = std::move(keep);
    return {std::move(down), std::move(up)};
  }

  // Splits one side of a fork with degree > 2 into a chain of binary forks.
  // At each step the node keeps the edge whose far endpoint is closest in the
  // order (highest below for the down side, lowest above for the up side);
  // the rest move to a fresh fork one ordinal step away.
  bool split_chain(std::uint32_t v, bool down_side, ConditioningReport& rep) {
    bool changed = false;
    std::uint32_t cur = v;
    int step = 1;
    while (true) {
      auto [down, up] = split_edges(cur);
      std::vector<std::uint32_t>& side = down_side ? down : up;
      if (side.size() <= 2) break;
      if (side.size() >= static_cast<std::size_t>(kOrdGap))
        throw std::invalid_argument("node degree too large to condition");
      auto closest = std::max_element(
          side.begin(), side.end(), [&](std::uint32_t e1, std::uint32_t e2) {
            const OrderKey k1 = key(other_end(e1, cur));
            const OrderKey k2 = key(other_end(e2, cur));
            return down_side ? k1 < k2 : k2 < k1;
          });
      const std::uint32_t retained = *closest;
      const std::int64_t ord =
          nodes_[v].ord + (down_side ? -static_cast<std::int64_t>(step)
                                     : static_cast<std::int64_t>(step));
      const std::string suffix = down_side ? ".d" : ".u";
      const std::uint32_t w = new_node(
          fresh_id(nodes_[v].id + suffix + std::to_string(step)), nodes_[v].f, ord, rep);
      for (std::uint32_t e : side)
        if (e != retained) repoint(e, cur, w);
      link(cur, w);
      cur = w;
      ++step;
      changed = true;
    }
    return changed;
  }

  std::vector<WorkNode> nodes_;
  std::vector<WorkEdge> edges_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::unordered_set<std::string> used_ids_;
};

void require_conditionable(const ReebGraph& g) {
  if (g.node_count() == 0) throw std::invalid_argument("cannot condition an empty graph");
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (g.neighbors(v).empty())
      throw std::invalid_argument("isolated node '" + g.node(v).id +
                                  "' has no canonical form");
  }
}

void finish_mapping(const ReebGraph& input, ConditioningReport& rep) {
  std::unordered_set<std::string> removed(rep.removed.begin(), rep.removed.end());
  for (NodeIndex v = 0; v < input.node_count(); ++v) {
    const std::string& id = input.node(v).id;
    if (!removed.count(id)) rep.mapping[id] = id;
  }
}

using Pass = bool (Conditioner::*)(ConditioningReport&);

ConditionResult run_single_pass(const ReebGraph& g, Pass pass) {
  require_conditionable(g);
  Conditioner c(g);
  ConditioningReport rep;
  (c.*pass)(rep);
  c.renormalize();
  ConditionResult result{c.build(), std::move(rep)};
  finish_mapping(g, result.report);
  return result;
}

}  // namespace

ConditionResult condition(const ReebGraph& g) {
  require_conditionable(g);
  Conditioner c(g);
  ConditioningReport rep;
  for (int round = 0;; ++round) {
    if (round > 8) throw std::logic_error("conditioning did not reach a fixpoint");
    bool changed = false;
    changed |= c.pass_complex_fork(rep);
    c.renormalize();
    changed |= c.pass_double_fork(rep);
    c.renormalize();
    changed |= c.pass_degenerate_extremum(rep);
    c.renormalize();
    changed |= c.pass_remove_regular(rep);
    c.renormalize();
    if (!changed) break;
  }
  ConditionResult result{c.build(), std::move(rep)};
  finish_mapping(g, result.report);

  for (const Violation& v : validate_conditioned(result.graph)) {
    if (v.rule != "graph is not connected")
      throw std::logic_error("conditioning left a violation on '" + v.node +
                             "': " + v.rule);
  }
  return result;
}

ConditionResult remove_regular(const ReebGraph& g) {
  return run_single_pass(g, &Conditioner::pass_remove_regular);
}

ConditionResult split_degenerate_extremum(const ReebGraph& g) {
  return run_single_pass(g, &Conditioner::pass_degenerate_extremum);
}

ConditionResult split_double_fork(const ReebGraph& g) {
  return run_single_pass(g, &Conditioner::pass_double_fork);
}

ConditionResult split_complex_fork(const ReebGraph& g) {
  return run_single_pass(g, &Conditioner::pass_complex_fork);
}

std::vector<ReebGraph> split_components(const ReebGraph& g) {
  std::vector<std::uint32_t> comp(g.node_count(), std::uint32_t(-1));
  std::uint32_t ncomp = 0;
  for (NodeIndex start = 0; start < g.node_count(); ++start) {
    if (comp[start] != std::uint32_t(-1)) continue;
    std::vector<NodeIndex> stack{start};
    comp[start] = ncomp;
    while (!stack.empty()) {
      NodeIndex v = stack.back();
      stack.pop_back();
      for (const ReebGraph::Adj& a : g.neighbors(v)) {
        if (comp[a.to] == std::uint32_t(-1)) {
          comp[a.to] = ncomp;
          stack.push_back(a.to);
        }
      }
    }
    ++ncomp;
  }

  std::vector<ReebGraph> parts(ncomp);
  std::vector<NodeIndex> remap(g.node_count());
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    const GraphNode& nd = g.node(v);
    remap[v] = parts[comp[v]].add_node(nd.id, nd.f, nd.ord, nd.synthetic);
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e)
    parts[comp[g.edge(e).a]].add_edge(remap[g.edge(e).a], remap[g.edge(e).b]);
  for (ReebGraph& p : parts) p.finalize();
  return parts;
}

}  // namespace reeb
