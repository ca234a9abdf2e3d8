#include "reeb/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace reeb {

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::MinSaddle: return "min-saddle";
    case PairClass::SaddleMax: return "saddle-max";
    case PairClass::Cycle: return "cycle";
  }
  return "?";
}

PersistencePair make_pair(const ReebGraph& g, NodeIndex birth, NodeIndex death,
                          PairClass cls, bool global) {
  PersistencePair p;
  p.birth = birth;
  p.death = death;
  p.cls = cls;
  p.global = global;
  p.synthetic = g.node(birth).synthetic || g.node(death).synthetic;
  return p;
}

bool row_less(const DiagramRow& a, const DiagramRow& b) {
  if (a.cls != b.cls) return a.cls < b.cls;
  if (a.birth_f != b.birth_f) return a.birth_f < b.birth_f;
  if (a.death_f != b.death_f) return a.death_f < b.death_f;
  if (a.birth_id != b.birth_id) return a.birth_id < b.birth_id;
  return a.death_id < b.death_id;
}

std::vector<DiagramRow> diagram_rows(const PersistenceDiagram& d, const ReebGraph& g) {
  std::vector<DiagramRow> rows;
  rows.reserve(d.pairs.size());
  for (const PersistencePair& p : d.pairs) {
    rows.push_back(DiagramRow{p.cls, g.node(p.birth).id, g.node(p.death).id,
                              g.node(p.birth).f, g.node(p.death).f, p.synthetic,
                              p.global});
  }
  std::sort(rows.begin(), rows.end(), row_less);
  return rows;
}

DiagramDiff diagram_diff(std::vector<DiagramRow> a, std::vector<DiagramRow> b) {
  std::sort(a.begin(), a.end(), row_less);
  std::sort(b.begin(), b.end(), row_less);
  DiagramDiff diff;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (row_less(a[i], b[j])) {
      diff.only_a.push_back(a[i++]);
    } else {
      diff.only_b.push_back(b[j++]);
    }
  }
  diff.only_a.insert(diff.only_a.end(), a.begin() + i, a.end());
  diff.only_b.insert(diff.only_b.end(), b.begin() + j, b.end());
  return diff;
}

DiagramDiff diagram_diff(const PersistenceDiagram& a, const PersistenceDiagram& b,
                         const ReebGraph& g) {
  return diagram_diff(diagram_rows(a, g), diagram_rows(b, g));
}

std::vector<std::string> check_diagram(const PersistenceDiagram& d, const ReebGraph& g) {
  std::vector<std::string> problems;
  std::vector<int> uses(g.node_count(), 0);
  std::size_t cycles = 0;

  for (const PersistencePair& p : d.pairs) {
    if (p.birth >= g.node_count() || p.death >= g.node_count()) {
      problems.push_back("pair references an unknown node");
      continue;
    }
    ++uses[p.birth];
    ++uses[p.death];
    const CriticalKind bk = g.kind(p.birth);
    const CriticalKind dk = g.kind(p.death);
    const std::string where = g.node(p.birth).id + "/" + g.node(p.death).id;
    switch (p.cls) {
      case PairClass::MinSaddle:
        if (p.global) {
          if (bk != CriticalKind::Minimum || dk != CriticalKind::Maximum)
            problems.push_back("global pair endpoints are not min/max: " + where);
        } else if (bk != CriticalKind::Minimum || dk != CriticalKind::DownFork) {
          problems.push_back("min-saddle pair is not (minimum, down-fork): " + where);
        }
        if (!g.before(p.birth, p.death))
          problems.push_back("min-saddle birth not below death: " + where);
        break;
      case PairClass::SaddleMax:
        if (bk != CriticalKind::Maximum || dk != CriticalKind::UpFork)
          problems.push_back("saddle-max pair is not (maximum, up-fork): " + where);
        if (!g.before(p.death, p.birth))
          problems.push_back("saddle-max death not below birth: " + where);
        break;
      case PairClass::Cycle:
        ++cycles;
        if (bk != CriticalKind::DownFork || dk != CriticalKind::UpFork)
          problems.push_back("cycle pair is not (down-fork, up-fork): " + where);
        if (!g.before(p.death, p.birth))
          problems.push_back("cycle death not below birth: " + where);
        break;
    }
  }

  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    if (uses[v] != 1)
      problems.push_back("node '" + g.node(v).id + "' appears in " +
                         std::to_string(uses[v]) + " pairs");
  }
  if (g.connected() && cycles != cycle_rank(g))
    problems.push_back("cycle pair count " + std::to_string(cycles) +
                       " != cycle rank " + std::to_string(cycle_rank(g)));
  return problems;
}

}  // namespace reeb
