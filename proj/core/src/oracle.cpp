#include "reeb/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "reeb/union_find.hpp"

namespace reeb {

namespace {

void require_oracle_input(const ReebGraph& g, std::size_t max_nodes) {
  if (g.node_count() > max_nodes)
    throw std::invalid_argument("oracle refused: graph has " +
                                std::to_string(g.node_count()) + " nodes (limit " +
                                std::to_string(max_nodes) + ")");
  if (!is_conditioned(g))
    throw std::invalid_argument("oracle requires a conditioned, connected graph");
}

// Components of the strict sublevel (or superlevel) set of `pivot`, with the
// creator (extremal node) of each component. Quadratic overall but direct.
struct LevelSetComponents {
  std::vector<std::uint32_t> comp;     // node -> component root, only valid inside the set
  std::vector<NodeIndex> creator;      // component root -> creator
  std::vector<char> inside;
};

LevelSetComponents strict_level_components(const ReebGraph& g, NodeIndex pivot, bool sublevel) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.node_count());
  const std::uint32_t r = g.rank(pivot);
  LevelSetComponents ls;
  ls.inside.assign(n, 0);
  for (NodeIndex v = 0; v < n; ++v)
    ls.inside[v] = sublevel ? (g.rank(v) < r) : (g.rank(v) > r);

  UnionFind uf(n);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const GraphEdge& ge = g.edge(e);
    if (ls.inside[ge.a] && ls.inside[ge.b]) uf.unite(ge.a, ge.b);
  }

  ls.comp.assign(n, 0);
  ls.creator.assign(n, invalid_node);
  for (NodeIndex v = 0; v < n; ++v) {
    if (!ls.inside[v]) continue;
    const std::uint32_t root = uf.find(v);
    ls.comp[v] = root;
    NodeIndex& c = ls.creator[root];
    if (c == invalid_node) c = v;
    else if (sublevel ? g.before(v, c) : g.before(c, v)) c = v;
  }
  return ls;
}

// The two strictly-lower (or strictly-higher) neighbors of a binary fork.
std::array<NodeIndex, 2> fork_branches(const ReebGraph& g, NodeIndex s, bool lower) {
  std::array<NodeIndex, 2> out{invalid_node, invalid_node};
  std::size_t k = 0;
  for (const ReebGraph::Adj& a : g.neighbors(s)) {
    const bool below = g.before(a.to, s);
    if (below == lower) out.at(k++) = a.to;
  }
  return out;
}

}  // namespace

std::vector<SimpleCycle> enumerate_simple_cycles(const ReebGraph& g, std::size_t budget) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.node_count());
  std::vector<SimpleCycle> cycles;
  std::vector<char> on_path(n, 0);
  std::vector<NodeIndex> path;
  std::size_t extensions = 0;

  // Anchored enumeration: every cycle is reported from its lowest-ranked
  // node, once per direction pair (first edge id < closing edge id).
  for (std::uint32_t ar = 0; ar < n; ++ar) {
    const NodeIndex a = g.at_rank(ar);
    path.assign(1, a);
    on_path[a] = 1;

    struct Frame {
      std::span<const ReebGraph::Adj> adj;
      std::size_t next = 0;
    };
    std::vector<Frame> stack{Frame{g.neighbors(a)}};
    std::vector<EdgeIndex> path_edges;

    while (!stack.empty()) {
      Frame& fr = stack.back();
      if (fr.next >= fr.adj.size()) {
        stack.pop_back();
        if (!path_edges.empty()) path_edges.pop_back();
        on_path[path.back()] = 0;
        path.pop_back();
        continue;
      }
      const ReebGraph::Adj step = fr.adj[fr.next++];
      if (++extensions > budget)
        throw std::runtime_error("simple-cycle enumeration budget exceeded");

      if (!path_edges.empty() && step.edge == path_edges.back()) continue;
      if (step.to == a) {
        if (path.size() < 2) continue;  // needs at least one intermediate node
        if (path_edges.empty() || step.edge <= path_edges.front()) continue;
        SimpleCycle c;
        c.nodes = path;
        c.bottom = a;
        c.top = *std::max_element(path.begin(), path.end(), [&](NodeIndex x, NodeIndex y) {
          return g.before(x, y);
        });
        cycles.push_back(std::move(c));
        continue;
      }
      if (g.rank(step.to) <= ar || on_path[step.to]) continue;
      path.push_back(step.to);
      path_edges.push_back(step.edge);
      on_path[step.to] = 1;
      stack.push_back(Frame{g.neighbors(step.to)});
    }
    on_path[a] = 0;
  }
  return cycles;
}

std::vector<PersistencePair> oracle_ordinary(const ReebGraph& g) {
  std::vector<PersistencePair> pairs;
  for (NodeIndex s = 0; s < g.node_count(); ++s) {
    const CriticalKind k = g.kind(s);
    if (k == CriticalKind::DownFork) {
      const LevelSetComponents ls = strict_level_components(g, s, /*sublevel=*/true);
      const auto br = fork_branches(g, s, /*lower=*/true);
      if (ls.comp[br[0]] == ls.comp[br[1]]) continue;  // essential
      const NodeIndex x1 = ls.creator[ls.comp[br[0]]];
      const NodeIndex x2 = ls.creator[ls.comp[br[1]]];
      const NodeIndex younger = g.before(x1, x2) ? x2 : x1;
      pairs.push_back(make_pair(g, younger, s, PairClass::MinSaddle));
    } else if (k == CriticalKind::UpFork) {
      const LevelSetComponents ls = strict_level_components(g, s, /*sublevel=*/false);
      const auto br = fork_branches(g, s, /*lower=*/false);
      if (ls.comp[br[0]] == ls.comp[br[1]]) continue;
      const NodeIndex x1 = ls.creator[ls.comp[br[0]]];
      const NodeIndex x2 = ls.creator[ls.comp[br[1]]];
      // Superlevel components are created at their maxima; the one with the
      // smaller maximum is the younger class and dies at s.
      const NodeIndex younger = g.before(x1, x2) ? x1 : x2;
      pairs.push_back(make_pair(g, younger, s, PairClass::SaddleMax));
    }
  }
  pairs.push_back(make_pair(g, g.at_rank(0),
                            g.at_rank(static_cast<std::uint32_t>(g.node_count() - 1)),
                            PairClass::MinSaddle, /*global=*/true));
  return pairs;
}

std::vector<PersistencePair> oracle_essential(const ReebGraph& g, const OracleLimits& lim) {
  const std::vector<SimpleCycle> cycles = enumerate_simple_cycles(g, lim.cycle_budget);

  // Per down-fork, the cycle topping out there with the highest bottom.
  std::vector<NodeIndex> best_bottom(g.node_count(), invalid_node);
  for (const SimpleCycle& c : cycles) {
    NodeIndex& best = best_bottom[c.top];
    if (best == invalid_node || g.before(best, c.bottom)) best = c.bottom;
  }

  std::vector<PersistencePair> pairs;
  for (NodeIndex s = 0; s < g.node_count(); ++s) {
    if (best_bottom[s] == invalid_node) continue;
    if (g.kind(s) != CriticalKind::DownFork)
      throw std::logic_error("cycle top '" + g.node(s).id + "' is not a down-fork");
    if (g.kind(best_bottom[s]) != CriticalKind::UpFork)
      throw std::logic_error("chosen cycle bottom '" + g.node(best_bottom[s]).id +
                             "' is not an up-fork");
    pairs.push_back(make_pair(g, s, best_bottom[s], PairClass::Cycle));
  }
  return pairs;
}

PersistenceDiagram oracle_diagram(const ReebGraph& g, const OracleLimits& lim) {
  require_oracle_input(g, lim.max_nodes);
  PersistenceDiagram d;
  d.algorithm = "oracle";
  d.input_hash = g.content_hash();
  d.pairs = oracle_ordinary(g);
  std::vector<PersistencePair> essential = oracle_essential(g, lim);
  d.pairs.insert(d.pairs.end(), essential.begin(), essential.end());

  std::vector<std::string> problems = check_diagram(d, g);
  if (!problems.empty())
    throw std::logic_error("oracle produced an inconsistent diagram: " + problems.front());
  return d;
}

}  // namespace reeb
