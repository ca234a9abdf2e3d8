#include "reeb/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "reeb/condition.hpp"

namespace reeb {

namespace {

// Platform-stable mappings over the (fully specified) mt19937_64 stream.
double next_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t next_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

ReebGraph generate_tree(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const bool join = spec.tree_mode == TreeMode::Join;

  struct Node {
    std::string id;
    double f;
  };
  std::vector<Node> nodes{{"n0", 0.0}};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::uint32_t> open{0};  // gluable: the seed, then free tips

  for (std::uint32_t i = 1; i <= spec.n; ++i) {
    // Pick a glue target with enough headroom; values above it stay in (f, 1).
    std::uint32_t target = 0;
    for (int attempt = 0;; ++attempt) {
      target = open[next_index(rng, open.size())];
      if (1.0 - nodes[target].f > 1e-9) break;
      if (attempt > 256)
        throw std::runtime_error("tree generator ran out of value headroom");
    }
    const double base = nodes[target].f;
    auto between = [&](double lo, double frac) {
      return lo + (1.0 - lo) * frac;
    };
    const double v_link = between(base, 0.25 * (0.1 + 0.8 * next_double(rng)));
    const double v_hub = between(v_link, 0.25 * (0.1 + 0.8 * next_double(rng)));
    const double v_a = between(v_hub, 0.2 + 0.6 * next_double(rng));
    const double v_b = between(v_hub, 0.2 + 0.6 * next_double(rng));

    const std::string tag = std::to_string(i);
    const std::uint32_t link = static_cast<std::uint32_t>(nodes.size());
    nodes.push_back({"t" + tag + "a", v_link});
    const std::uint32_t hub = static_cast<std::uint32_t>(nodes.size());
    nodes.push_back({"h" + tag, v_hub});
    const std::uint32_t tip_a = static_cast<std::uint32_t>(nodes.size());
    nodes.push_back({"t" + tag + "b", v_a});
    const std::uint32_t tip_b = static_cast<std::uint32_t>(nodes.size());
    nodes.push_back({"t" + tag + "c", v_b});

    edges.emplace_back(hub, link);
    edges.emplace_back(hub, tip_a);
    edges.emplace_back(hub, tip_b);
    edges.emplace_back(link, target);

    open.erase(std::find(open.begin(), open.end(), target));
    open.push_back(tip_a);
    open.push_back(tip_b);
  }

  ReebGraph g;
  for (const Node& nd : nodes) g.add_node(nd.id, join ? 1.0 - nd.f : nd.f);
  for (auto [a, b] : edges) g.add_edge(a, b);
  g.finalize();
  return g;
}

ReebGraph generate_graph(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed);

  ReebGraph g;
  g.add_node("n0", next_double(rng));
  std::vector<std::uint32_t> open{0};

  for (std::uint32_t i = 1; i <= spec.n; ++i) {
    const std::string tag = std::to_string(i);
    const NodeIndex hub = g.add_node("h" + tag, next_double(rng));
    const NodeIndex tip_a = g.add_node("t" + tag + "a", next_double(rng));
    const NodeIndex tip_b = g.add_node("t" + tag + "b", next_double(rng));
    const NodeIndex tip_c = g.add_node("t" + tag + "c", next_double(rng));
    g.add_edge(hub, tip_a);
    g.add_edge(hub, tip_b);
    g.add_edge(hub, tip_c);

    const bool two_point = open.size() >= 2 && next_double(rng) < spec.p2;
    const std::size_t i1 = next_index(rng, open.size());
    const std::uint32_t g1 = open[i1];
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(i1));
    g.add_edge(tip_a, g1);

    if (two_point) {
      const std::size_t i2 = next_index(rng, open.size());
      const std::uint32_t g2 = open[i2];
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(i2));
      g.add_edge(tip_b, g2);
      open.push_back(tip_c);
    } else {
      open.push_back(tip_b);
      open.push_back(tip_c);
    }
  }
  g.finalize();
  return g;
}

// Bridges of the alive subgraph (iterative lowlink; parallel edges are never
// bridges since only the entering edge id is skipped).
std::vector<char> find_bridges(const ReebGraph& g, const std::vector<char>& edge_alive) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.node_count());
  std::vector<char> is_bridge(g.edge_count(), 0);
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::uint32_t timer = 1;

  struct Frame {
    NodeIndex v;
    EdgeIndex via;
    std::size_t next = 0;
  };
  for (NodeIndex start = 0; start < n; ++start) {
    if (disc[start]) continue;
    std::vector<Frame> stack{{start, invalid_edge}};
    disc[start] = low[start] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const auto adj = g.neighbors(fr.v);
      if (fr.next < adj.size()) {
        const ReebGraph::Adj a = adj[fr.next++];
        if (!edge_alive[a.edge] || a.edge == fr.via) continue;
        if (disc[a.to]) {
          low[fr.v] = std::min(low[fr.v], disc[a.to]);
        } else {
          disc[a.to] = low[a.to] = timer++;
          stack.push_back(Frame{a.to, a.edge});
        }
      } else {
        const Frame done = fr;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& up = stack.back();
          low[up.v] = std::min(low[up.v], low[done.v]);
          if (low[done.v] > disc[up.v]) is_bridge[done.via] = 1;
        }
      }
    }
  }
  return is_bridge;
}

}  // namespace

ReebGraph generate(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
  if (spec.p2 < 0.0 || spec.p2 > 1.0)
    throw std::invalid_argument("p2 must be within [0, 1]");
  return spec.kind == GenKind::Tree ? generate_tree(spec) : generate_graph(spec);
}

ReebGraph cut_cycles(const ReebGraph& conditioned, std::size_t k, std::uint64_t seed) {
  if (k > cycle_rank(conditioned))
    throw std::invalid_argument("cannot cut " + std::to_string(k) +
                                " cycles; rank is " +
                                std::to_string(cycle_rank(conditioned)));
  std::mt19937_64 rng(seed);
  std::vector<char> alive(conditioned.edge_count(), 1);

  for (std::size_t cut = 0; cut < k; ++cut) {
    const std::vector<char> bridge = find_bridges(conditioned, alive);
    std::vector<EdgeIndex> candidates;
    for (EdgeIndex e = 0; e < conditioned.edge_count(); ++e)
      if (alive[e] && !bridge[e]) candidates.push_back(e);
    if (candidates.empty())
      throw std::logic_error("no non-bridge edge left while cuts remain");
    alive[candidates[next_index(rng, candidates.size())]] = 0;
  }

  ReebGraph pruned;
  for (NodeIndex v = 0; v < conditioned.node_count(); ++v) {
    const GraphNode& nd = conditioned.node(v);
    pruned.add_node(nd.id, nd.f, nd.ord, nd.synthetic);
  }
  for (EdgeIndex e = 0; e < conditioned.edge_count(); ++e)
    if (alive[e]) pruned.add_edge(conditioned.edge(e).a, conditioned.edge(e).b);
  pruned.finalize();
  return condition(pruned).graph;
}

}  // namespace reeb
