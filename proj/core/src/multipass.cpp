#include "reeb/multipass.hpp"

#include <algorithm>
#include <stdexcept>

#include "reeb/union_find.hpp"

namespace reeb {

namespace {

void require_conditioned_connected(const ReebGraph& g, const char* who) {
  if (!is_conditioned(g))
    throw std::invalid_argument(std::string(who) +
                                " requires a conditioned, connected graph");
}

}  // namespace

const char* to_string(StackOp op) {
  switch (op) {
    case StackOp::T1: return "T1";
    case StackOp::T2: return "T2";
    case StackOp::T3: return "T3";
  }
  return "?";
}

MergeTree build_merge_tree(const ReebGraph& g, TreeSide side) {
  require_conditioned_connected(g, "build_merge_tree");
  const std::uint32_t n = static_cast<std::uint32_t>(g.node_count());

  MergeTree t;
  t.side = side;
  t.children.assign(n, {invalid_node, invalid_node});
  t.parent.assign(n, invalid_node);
  t.member.assign(n, 0);

  // Sweep in filtration order (ascending for the join tree, descending for
  // the split tree); `behind` means already swept.
  const bool join = side == TreeSide::Join;
  auto behind = [&](NodeIndex u, NodeIndex v) {
    return join ? g.before(u, v) : g.before(v, u);
  };

  UnionFind uf(n);
  std::vector<NodeIndex> comp_top(n, invalid_node);  // valid at set roots

  for (std::uint32_t i = 0; i < n; ++i) {
    const NodeIndex v = g.at_rank(join ? i : n - 1 - i);
    NodeIndex swept[2];
    std::size_t nswept = 0;
    for (const ReebGraph::Adj& a : g.neighbors(v))
      if (behind(a.to, v)) {
        if (nswept == 2) throw std::logic_error("fork with more than two swept branches");
        swept[nswept++] = a.to;
      }

    if (nswept == 0) {
      // Extremum: creates a component; a leaf of the tree.
      t.member[v] = 1;
      t.leaves.push_back(v);
      comp_top[uf.find(v)] = v;
      continue;
    }
    if (nswept == 1) {
      const std::uint32_t r = uf.find(swept[0]);
      const NodeIndex top = comp_top[r];
      uf.unite(v, swept[0]);
      comp_top[uf.find(v)] = top;
      continue;
    }
    const std::uint32_t r1 = uf.find(swept[0]);
    const std::uint32_t r2 = uf.find(swept[1]);
    if (r1 == r2) {
      // Essential fork: merges nothing, stays out of the tree.
      uf.unite(v, swept[0]);
      comp_top[uf.find(v)] = comp_top[r1];
      continue;
    }
    t.member[v] = 1;
    t.interior.push_back(v);
    t.children[v] = {comp_top[r1], comp_top[r2]};
    t.parent[comp_top[r1]] = v;
    t.parent[comp_top[r2]] = v;
    uf.unite(v, swept[0]);
    uf.unite(v, swept[1]);
    comp_top[uf.find(v)] = v;
  }

  t.root = t.interior.empty() ? t.leaves.front() : t.interior.back();
  return t;
}

MergeTreePairing pair_merge_tree(const ReebGraph& g, const MergeTree& tree,
                                 bool first_child_on_top) {
  if (tree.root == invalid_node || tree.leaves.empty())
    throw std::invalid_argument("pair_merge_tree on an empty tree");

  const bool join = tree.side == TreeSide::Join;
  // `closer` to a fork from the swept side means larger in the join sweep,
  // smaller in the split sweep.
  auto closer = [&](NodeIndex a, NodeIndex b) {
    return join ? g.before(b, a) : g.before(a, b);
  };

  struct Frame {
    NodeIndex node;            // subtree root this frame stands for
    NodeIndex repr;            // surviving extremum; invalid for a fork
    bool is_leaf() const { return repr != invalid_node; }
  };

  MergeTreePairing out;
  std::vector<Frame> stack;
  auto push = [&](NodeIndex v) {
    stack.push_back(Frame{v, tree.is_leaf(v) ? v : invalid_node});
  };
  push(tree.root);

  while (!(stack.size() == 1 && stack.back().is_leaf())) {
    Frame& top = stack.back();
    if (!top.is_leaf()) {
      // Type 1: expand the fork; its children cover it on the stack.
      out.trace.push_back(StackOp::T1);
      const auto& ch = tree.children[top.node];
      if (ch[0] == invalid_node || ch[1] == invalid_node)
        throw std::logic_error("interior tree node is not binary");
      push(first_child_on_top ? ch[1] : ch[0]);
      push(first_child_on_top ? ch[0] : ch[1]);
      continue;
    }
    if (stack.size() >= 2 && !stack[stack.size() - 2].is_leaf()) {
      // Type 2: leaf above an unexpanded fork; swap them.
      out.trace.push_back(StackOp::T2);
      std::swap(stack[stack.size() - 1], stack[stack.size() - 2]);
      continue;
    }
    // Type 3: two collapsed leaves above their parent fork.
    if (stack.size() < 3)
      throw std::logic_error("malformed stack: two leaves without a parent fork");
    Frame a = stack[stack.size() - 1];
    Frame b = stack[stack.size() - 2];
    Frame fork = stack[stack.size() - 3];
    if (fork.is_leaf() || tree.parent[a.node] != fork.node ||
        tree.parent[b.node] != fork.node)
      throw std::logic_error("malformed stack: leaves not children of the fork below");
    out.trace.push_back(StackOp::T3);

    const NodeIndex paired = closer(a.repr, b.repr) ? a.repr : b.repr;
    const NodeIndex survivor = paired == a.repr ? b.repr : a.repr;
    // Elder rule: the survivor is the more extreme representative.
    if (closer(survivor, paired))
      throw std::logic_error("elder-rule violation in merge-tree pairing");
    out.pairs.push_back(make_pair(g, paired, fork.node,
                                  join ? PairClass::MinSaddle : PairClass::SaddleMax));
    stack.resize(stack.size() - 3);
    stack.push_back(Frame{fork.node, survivor});
  }

  out.survivor = stack.back().repr;
  if (out.pairs.size() + 1 != tree.leaves.size())
    throw std::logic_error("merge-tree pairing did not consume every leaf");
  return out;
}

PersistencePair pair_global(const ReebGraph& g, NodeIndex min_survivor,
                            NodeIndex max_survivor) {
  if (g.rank(min_survivor) != 0 ||
      g.rank(max_survivor) != g.node_count() - 1)
    throw std::invalid_argument("pair_global expects the global extrema");
  return make_pair(g, min_survivor, max_survivor, PairClass::MinSaddle,
                   /*global=*/true);
}

NodeIndex pair_essential_upfork(const ReebGraph& g, NodeIndex s) {
  if (g.kind(s) != CriticalKind::UpFork)
    throw std::invalid_argument("pair_essential_upfork expects an up-fork");
  const std::uint32_t n = static_cast<std::uint32_t>(g.node_count());
  const std::uint32_t level = g.rank(s);

  // Slots: nodes, then s_L and s_R, then one seed per edge truncated by the
  // level (component initialization for edges crossing f(s) away from s).
  const std::uint32_t slot_sl = n;
  const std::uint32_t slot_sr = n + 1;
  auto slot_seed = [&](EdgeIndex e) { return n + 2 + e; };
  UnionFind uf(n + 2 + static_cast<std::uint32_t>(g.edge_count()));

  EdgeIndex leg_l = invalid_edge;
  for (const ReebGraph::Adj& a : g.neighbors(s)) {
    if (!g.before(s, a.to)) continue;
    leg_l = a.edge;
    break;  // the other up edge implicitly becomes the R leg
  }

  for (std::uint32_t r = level + 1; r < n; ++r) {
    const NodeIndex v = g.at_rank(r);
    for (const ReebGraph::Adj& a : g.neighbors(v)) {
      if (!g.before(a.to, v)) continue;
      if (a.to == s)
        uf.unite(v, a.edge == leg_l ? slot_sl : slot_sr);
      else if (g.rank(a.to) > level)
        uf.unite(v, a.to);
      else
        uf.unite(v, slot_seed(a.edge));
    }
    if (uf.same(slot_sl, slot_sr)) {
      if (g.kind(v) != CriticalKind::DownFork)
        throw std::logic_error("essential sweep merged the legs away from a down-fork");
      return v;
    }
  }
  throw std::logic_error("essential sweep exhausted the graph without pairing '" +
                         g.node(s).id + "'");
}

PersistenceDiagram pair_multipass(const ReebGraph& g) {
  require_conditioned_connected(g, "pair_multipass");

  const MergeTree join = build_merge_tree(g, TreeSide::Join);
  const MergeTree split = build_merge_tree(g, TreeSide::Split);
  MergeTreePairing jp = pair_merge_tree(g, join);
  MergeTreePairing sp = pair_merge_tree(g, split);

  PersistenceDiagram d;
  d.algorithm = "multipass";
  d.input_hash = g.content_hash();
  d.pairs = std::move(jp.pairs);
  d.pairs.insert(d.pairs.end(), sp.pairs.begin(), sp.pairs.end());
  d.pairs.push_back(pair_global(g, jp.survivor, sp.survivor));

  // Essential up-forks, in ascending order. Each sweep is independent.
  std::vector<char> partner_used(g.node_count(), 0);
  std::size_t cycles = 0;
  for (std::uint32_t r = 0; r < g.node_count(); ++r) {
    const NodeIndex s = g.at_rank(r);
    if (g.kind(s) != CriticalKind::UpFork || split.contains(s)) continue;
    const NodeIndex down = pair_essential_upfork(g, s);
    if (join.contains(down) || partner_used[down])
      throw std::logic_error("essential pairing is not a bijection");
    partner_used[down] = 1;
    d.pairs.push_back(make_pair(g, down, s, PairClass::Cycle));
    ++cycles;
  }
  if (cycles != cycle_rank(g))
    throw std::logic_error("essential pair count does not match the cycle rank");
  return d;
}

}  // namespace reeb
