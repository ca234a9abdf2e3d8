#include "reeb/singlepass.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace reeb {

SweepDirection choose_sweep_direction(const ReebGraph& g, SweepMode mode) {
  if (mode == SweepMode::Ascending) return SweepDirection::Ascending;
  if (mode == SweepMode::Descending) return SweepDirection::Descending;
  std::size_t up = 0, down = 0;
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    const CriticalKind k = g.kind(v);
    if (k == CriticalKind::UpFork) ++up;
    else if (k == CriticalKind::DownFork) ++down;
  }
  return up > down ? SweepDirection::Descending : SweepDirection::Ascending;
}

namespace {

constexpr std::uint8_t kLegL = 1;
constexpr std::uint8_t kLegR = 2;
constexpr std::uint8_t kBothLegs = kLegL | kLegR;
constexpr std::uint32_t no_rank = std::uint32_t(-1);

// One ascending sweep over a conditioned graph. Labels of unpaired minima and
// up-fork legs ride on the pending edges of the sweep front; virtual edges
// record passages through the sublevel set between two front edges, usable by
// labels strictly below the creating up-fork's value.
//
// Label sets are flat vectors sorted by source rank; paired entries are
// dropped whenever a set is copied or merged.
class SweepEngine {
 public:
  SweepEngine(const ReebGraph& g, const SinglePassOptions& opt, SinglePassStats* stats)
      : g_(g),
        use_vedges_(opt.virtual_edges),
        strict_(opt.virtual_edges),
        stats_(stats),
        partner_(g.node_count(), invalid_node),
        labels_(g.edge_count()),
        vincident_(g.edge_count()) {}

  std::vector<PersistencePair> run() {
    const std::uint32_t n = static_cast<std::uint32_t>(g_.node_count());
    for (std::uint32_t r = 0; r < n; ++r) {
      const NodeIndex v = g_.at_rank(r);
      EdgeIndex down[2] = {invalid_edge, invalid_edge};
      EdgeIndex up[2] = {invalid_edge, invalid_edge};
      std::size_t ndown = 0, nup = 0;
      for (const ReebGraph::Adj& a : g_.neighbors(v)) {
        if (g_.before(a.to, v)) down[ndown++] = a.edge;
        else up[nup++] = a.edge;
      }
      switch (g_.kind(v)) {
        case CriticalKind::Minimum: process_minimum(v, up[0]); break;
        case CriticalKind::Maximum: process_maximum(v, down[0], r + 1 == n); break;
        case CriticalKind::UpFork: process_upfork(v, down[0], up[0], up[1]); break;
        case CriticalKind::DownFork: process_downfork(v, down[0], down[1], up[0]); break;
        default:
          throw std::invalid_argument("sweep reached an unconditioned node '" +
                                      g_.node(v).id + "'");
      }
    }
    if (strict_) {
      for (NodeIndex v = 0; v < g_.node_count(); ++v)
        if (partner_[v] == invalid_node)
          throw std::logic_error("node '" + g_.node(v).id + "' left unpaired by the sweep");
    }
    return std::move(out_);
  }

 private:
  struct Label {
    std::uint32_t rank;
    std::uint8_t mask;
  };
  using LabelSet = std::vector<Label>;  // sorted by rank, ranks unique

  struct VEdge {
    EdgeIndex e1 = invalid_edge;
    EdgeIndex e2 = invalid_edge;
    std::uint32_t threshold = no_rank;  // creator rank; minimum over merges
    bool alive = false;
  };

  bool paired_rank(std::uint32_t r) const { return partner_[g_.at_rank(r)] != invalid_node; }

  void count_insertions(std::size_t k) {
    if (stats_) stats_->label_insertions += k;
  }

  // dst := live(dst) U live(src); masks of equal ranks are OR-ed.
  void merge_into(LabelSet& dst, const LabelSet& src) {
    scratch_.clear();
    scratch_.reserve(dst.size() + src.size());
    auto a = dst.begin();
    auto b = src.begin();
    while (a != dst.end() || b != src.end()) {
      Label next;
      if (b == src.end() || (a != dst.end() && a->rank < b->rank)) {
        next = *a++;
      } else if (a == dst.end() || b->rank < a->rank) {
        next = *b++;
      } else {
        next = Label{a->rank, static_cast<std::uint8_t>(a->mask | b->mask)};
        ++a;
        ++b;
      }
      if (!paired_rank(next.rank)) scratch_.push_back(next);
    }
    dst.swap(scratch_);
    count_insertions(dst.size());
  }

  // Drops paired entries in place.
  void compact(LabelSet& ls) {
    ls.erase(std::remove_if(ls.begin(), ls.end(),
                            [&](const Label& l) { return paired_rank(l.rank); }),
             ls.end());
  }

  // --- virtual edges ------------------------------------------------------

  static std::uint64_t pair_key(EdgeIndex a, EdgeIndex b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(a) << 32) | b;
  }

  void kill_vedge(std::uint32_t id) {
    if (!vpool_[id].alive) return;
    vpool_[id].alive = false;
    --alive_vedges_;
    auto it = by_pair_.find(pair_key(vpool_[id].e1, vpool_[id].e2));
    if (it != by_pair_.end() && it->second == id) by_pair_.erase(it);
  }

  void add_vedge(EdgeIndex a, EdgeIndex b, std::uint32_t threshold) {
    if (a == b) return;
    const std::uint64_t key = pair_key(a, b);
    auto it = by_pair_.find(key);
    if (it != by_pair_.end() && vpool_[it->second].alive) {
      // Same endpoints: the higher passage admits a superset of labels.
      if (vpool_[it->second].threshold >= threshold) return;
      kill_vedge(it->second);
    }
    const std::uint32_t id = static_cast<std::uint32_t>(vpool_.size());
    vpool_.push_back(VEdge{a, b, threshold, true});
    ++alive_vedges_;
    vincident_[a].push_back(id);
    vincident_[b].push_back(id);
    by_pair_[key] = id;
    if (stats_ && alive_vedges_ > stats_->max_alive_vedges)
      stats_->max_alive_vedges = alive_vedges_;
  }

  // Alive virtual edges touching e.
  void collect_incident(EdgeIndex e, std::vector<std::uint32_t>& out) {
    for (std::uint32_t id : vincident_[e]) {
      const VEdge& ve = vpool_[id];
      if (!ve.alive || (ve.e1 != e && ve.e2 != e)) continue;
      if (!out.empty() && out.back() == id) continue;
      out.push_back(id);
    }
  }

  std::vector<std::uint32_t> incident_one(EdgeIndex e) {
    std::vector<std::uint32_t> ids;
    collect_incident(e, ids);
    return ids;
  }

  std::vector<std::uint32_t> incident_two(EdgeIndex e1, EdgeIndex e2) {
    std::vector<std::uint32_t> ids;
    collect_incident(e1, ids);
    collect_incident(e2, ids);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  }

  // Far endpoints of the given passages, one entry per edge at the highest
  // threshold. A higher passage admits a superset of labels, so evaluating
  // the best passage per far edge once is equivalent to evaluating them all.
  std::vector<std::pair<EdgeIndex, std::uint32_t>> distinct_fars(
      const std::vector<std::uint32_t>& incoming, EdgeIndex in1, EdgeIndex in2) {
    std::vector<std::pair<EdgeIndex, std::uint32_t>> fars;
    for (std::uint32_t id : incoming) {
      const VEdge& ve = vpool_[id];
      const bool a_in = ve.e1 == in1 || ve.e1 == in2;
      const bool b_in = ve.e2 == in1 || ve.e2 == in2;
      if (a_in && b_in) continue;  // passage between the merging fronts
      fars.emplace_back(a_in ? ve.e2 : ve.e1, ve.threshold);
    }
    std::sort(fars.begin(), fars.end(),
              [](const auto& a, const auto& b) {
                return a.first != b.first ? a.first < b.first : a.second > b.second;
              });
    fars.erase(std::unique(fars.begin(), fars.end(),
                           [](const auto& a, const auto& b) { return a.first == b.first; }),
               fars.end());
    return fars;
  }

  // Merges the labels the passage admits (strictly below its threshold) from
  // the far front into `avail`.
  void pull(LabelSet& avail, EdgeIndex far, std::uint32_t threshold) {
    const LabelSet& src = labels_[far];
    const auto end = std::lower_bound(
        src.begin(), src.end(), threshold,
        [](const Label& l, std::uint32_t t) { return l.rank < t; });
    if (src.begin() == end) return;
    prefix_.assign(src.begin(), end);
    if (stats_) stats_->label_crossings += prefix_.size();
    merge_into(avail, prefix_);
  }

  // --- pairing --------------------------------------------------------------

  void record(NodeIndex birth, NodeIndex death, PairClass cls, bool global = false) {
    if (partner_[birth] != invalid_node || partner_[death] != invalid_node)
      throw std::logic_error("attempt to re-pair a node");
    partner_[birth] = death;
    partner_[death] = birth;
    out_.push_back(make_pair(g_, birth, death, cls, global));
  }

  // --- node handlers --------------------------------------------------------

  void process_minimum(NodeIndex v, EdgeIndex out) {
    labels_[out].push_back(Label{g_.rank(v), kLegL});
    count_insertions(1);
  }

  void process_upfork(NodeIndex v, EdgeIndex in, EdgeIndex up0, EdgeIndex up1) {
    // Leg tags are arbitrary but deterministic: the branch toward the
    // lower-ordered upper endpoint (lower edge id on ties) is L.
    EdgeIndex leg_l = up0, leg_r = up1;
    const NodeIndex t0 = g_.upper_end(up0);
    const NodeIndex t1 = g_.upper_end(up1);
    if (t0 == t1 ? up1 < up0 : g_.before(t1, t0)) std::swap(leg_l, leg_r);

    LabelSet base = std::move(labels_[in]);
    labels_[in] = LabelSet();
    compact(base);

    // The fork's own rank is above everything swept so far.
    labels_[leg_r] = base;
    labels_[leg_r].push_back(Label{g_.rank(v), kLegR});
    labels_[leg_l] = std::move(base);
    labels_[leg_l].push_back(Label{g_.rank(v), kLegL});
    count_insertions(labels_[leg_l].size() + 1);

    if (use_vedges_) {
      for (std::uint32_t id : incident_one(in)) {
        const VEdge ve = vpool_[id];
        const EdgeIndex far = ve.e1 == in ? ve.e2 : ve.e1;
        kill_vedge(id);
        add_vedge(leg_l, far, ve.threshold);
        add_vedge(leg_r, far, ve.threshold);
      }
      vincident_[in] = {};
      add_vedge(leg_l, leg_r, g_.rank(v));
      if (stats_) ++stats_->vedges_created;
    }
  }

  void process_downfork(NodeIndex v, EdgeIndex in1, EdgeIndex in2, EdgeIndex out) {
    LabelSet avail = std::move(labels_[in1]);
    labels_[in1] = LabelSet();
    merge_into(avail, labels_[in2]);
    labels_[in2] = LabelSet();

    std::vector<std::uint32_t> incoming;
    std::vector<std::pair<EdgeIndex, std::uint32_t>> fars;
    if (use_vedges_) {
      incoming = incident_two(in1, in2);
      fars = distinct_fars(incoming, in1, in2);
      for (const auto& [far, threshold] : fars) pull(avail, far, threshold);
    }

    // Prefer the largest unpaired up-fork with both legs present (this fork
    // closes that cycle); otherwise the highest unpaired minimum dies here.
    std::uint32_t cycle_with = no_rank;
    std::uint32_t min_label = no_rank;
    for (auto it = avail.rbegin(); it != avail.rend(); ++it) {
      if (paired_rank(it->rank)) continue;
      const NodeIndex src = g_.at_rank(it->rank);
      if (g_.kind(src) == CriticalKind::UpFork) {
        if ((it->mask & kBothLegs) == kBothLegs) {
          cycle_with = it->rank;
          break;
        }
      } else if (min_label == no_rank) {
        min_label = it->rank;
      }
    }

    if (cycle_with != no_rank) {
      record(v, g_.at_rank(cycle_with), PairClass::Cycle);
    } else if (min_label != no_rank) {
      record(g_.at_rank(min_label), v, PairClass::MinSaddle);
    } else if (strict_) {
      throw std::logic_error("no pairing candidate at down-fork '" + g_.node(v).id + "'");
    }

    labels_[out] = std::move(avail);

    if (use_vedges_) {
      // Pairwise-merge the passages meeting here: a route in through one
      // passage and out through the other remains a passage, at the minimum
      // of the two thresholds.
      for (std::size_t i = 0; i < fars.size(); ++i)
        for (std::size_t j = i + 1; j < fars.size(); ++j) {
          if (fars[i].first == fars[j].first) continue;
          add_vedge(fars[i].first, fars[j].first,
                    std::min(fars[i].second, fars[j].second));
          if (stats_) ++stats_->vedges_merged;
        }
      for (std::uint32_t id : incoming) kill_vedge(id);
      for (const auto& [far, threshold] : fars) add_vedge(out, far, threshold);
      vincident_[in1] = {};
      vincident_[in2] = {};
    }
  }

  void process_maximum(NodeIndex v, EdgeIndex in, bool is_last) {
    LabelSet avail = std::move(labels_[in]);
    labels_[in] = LabelSet();

    std::vector<std::pair<EdgeIndex, std::uint32_t>> fars;
    std::vector<std::uint32_t> incoming;
    if (use_vedges_) {
      incoming = incident_one(in);
      fars = distinct_fars(incoming, in, in);
      for (const auto& [far, threshold] : fars) pull(avail, far, threshold);
    }

    std::uint32_t fork_label = no_rank;
    std::uint32_t min_label = no_rank;
    for (auto it = avail.rbegin(); it != avail.rend(); ++it) {
      if (paired_rank(it->rank)) continue;
      if (g_.kind(g_.at_rank(it->rank)) == CriticalKind::UpFork) {
        fork_label = it->rank;
        break;
      }
      if (min_label == no_rank) min_label = it->rank;
    }

    if (fork_label != no_rank) {
      record(v, g_.at_rank(fork_label), PairClass::SaddleMax);
    } else if (min_label != no_rank) {
      if (strict_ && !is_last)
        throw std::logic_error("interior maximum '" + g_.node(v).id +
                               "' found no up-fork label");
      record(g_.at_rank(min_label), v, PairClass::MinSaddle, /*global=*/is_last);
    } else if (strict_) {
      throw std::logic_error("maximum '" + g_.node(v).id + "' found no label");
    }

    if (use_vedges_) {
      // The front ends here. Hand the admissible leftovers across each
      // passage before discarding it; there is no other way out for them.
      for (std::uint32_t id : incoming) {
        const VEdge ve = vpool_[id];
        const EdgeIndex far = ve.e1 == in ? ve.e2 : ve.e1;
        const auto end = std::lower_bound(
            avail.begin(), avail.end(), ve.threshold,
            [](const Label& l, std::uint32_t t) { return l.rank < t; });
        if (avail.begin() != end) {
          prefix_.assign(avail.begin(), end);
          if (stats_) stats_->label_crossings += prefix_.size();
          merge_into(labels_[far], prefix_);
        }
        kill_vedge(id);
      }
      vincident_[in] = {};
    }
  }

  const ReebGraph& g_;
  bool use_vedges_;
  bool strict_;
  SinglePassStats* stats_;
  std::vector<NodeIndex> partner_;
  std::vector<LabelSet> labels_;
  LabelSet scratch_;
  LabelSet prefix_;
  std::vector<VEdge> vpool_;
  std::vector<std::vector<std::uint32_t>> vincident_;
  std::unordered_map<std::uint64_t, std::uint32_t> by_pair_;
  std::size_t alive_vedges_ = 0;
  std::vector<PersistencePair> out_;
};

}  // namespace

PersistenceDiagram pair_singlepass(const ReebGraph& g, const SinglePassOptions& opt,
                                   SinglePassStats* stats) {
  if (!is_conditioned(g))
    throw std::invalid_argument("pair_singlepass requires a conditioned, connected graph");

  const SweepDirection dir = choose_sweep_direction(g, opt.mode);
  PersistenceDiagram d;
  d.input_hash = g.content_hash();

  if (dir == SweepDirection::Ascending) {
    d.algorithm = "single-pass(asc)";
    d.pairs = SweepEngine(g, opt, stats).run();
    return d;
  }

  // Descending: run the identical engine on the mirror graph, then swap the
  // roles back. Node indices are preserved by negation.
  d.algorithm = "single-pass(desc)";
  const ReebGraph mirror = g.negated();
  std::vector<PersistencePair> mirrored = SweepEngine(mirror, opt, stats).run();
  d.pairs.reserve(mirrored.size());
  for (const PersistencePair& p : mirrored) {
    if (p.global || p.cls == PairClass::Cycle) {
      d.pairs.push_back(make_pair(g, p.death, p.birth, p.cls, p.global));
    } else if (p.cls == PairClass::MinSaddle) {
      d.pairs.push_back(make_pair(g, p.birth, p.death, PairClass::SaddleMax));
    } else {
      d.pairs.push_back(make_pair(g, p.birth, p.death, PairClass::MinSaddle));
    }
  }
  return d;
}

}  // namespace reeb
