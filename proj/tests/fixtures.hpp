#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reeb/condition.hpp"
#include "reeb/diagram.hpp"
#include "reeb/graph.hpp"

namespace fixtures {

// The 16-node running example: nodes A..P at ascending values 1..16,
// 18 edges, cycle rank 3.
inline reeb::ReebGraph fig1() {
  reeb::ReebGraph g;
  for (char c = 'A'; c <= 'P'; ++c)
    g.add_node(std::string(1, c), static_cast<double>(c - 'A' + 1));
  auto e = [&](char a, char b) { g.add_edge(a - 'A', b - 'A'); };
  e('A', 'C');
  e('B', 'C');
  e('C', 'D');
  e('D', 'F');
  e('D', 'G');
  e('E', 'G');
  e('F', 'I');
  e('F', 'J');
  e('G', 'L');
  e('H', 'K');
  e('I', 'J');
  e('I', 'M');
  e('J', 'K');
  e('K', 'L');
  e('L', 'M');
  e('M', 'N');
  e('N', 'O');
  e('N', 'P');
  g.finalize();
  return g;
}

// The eight pairs of the fig1 fixture in canonical row order.
inline std::vector<reeb::DiagramRow> fig1_rows() {
  using reeb::PairClass;
  std::vector<reeb::DiagramRow> rows = {
      {PairClass::MinSaddle, "A", "P", 1, 16, false, true},
      {PairClass::MinSaddle, "B", "C", 2, 3, false, false},
      {PairClass::MinSaddle, "E", "G", 5, 7, false, false},
      {PairClass::MinSaddle, "H", "K", 8, 11, false, false},
      {PairClass::SaddleMax, "O", "N", 15, 14, false, false},
      {PairClass::Cycle, "J", "F", 10, 6, false, false},
      {PairClass::Cycle, "L", "D", 12, 4, false, false},
      {PairClass::Cycle, "M", "I", 13, 9, false, false},
  };
  std::sort(rows.begin(), rows.end(), reeb::row_less);
  return rows;
}

// Small builder for hand-written fixtures.
inline reeb::ReebGraph make_graph(
    const std::vector<std::pair<std::string, double>>& nodes,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  reeb::ReebGraph g;
  std::vector<std::string> ids;
  for (const auto& [id, f] : nodes) {
    g.add_node(id, f);
    ids.push_back(id);
  }
  auto index = [&](const std::string& id) -> reeb::NodeIndex {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return static_cast<reeb::NodeIndex>(i);
    throw std::logic_error("fixture references unknown id " + id);
  };
  for (const auto& [a, b] : edges) g.add_edge(index(a), index(b));
  g.finalize();
  return g;
}

// Connected random multigraph with arbitrary degrees (degenerate extrema,
// complex forks, parallel edges); exercises the conditioning pipeline.
inline reeb::ReebGraph messy_graph(std::mt19937_64& rng, int n_nodes, int extra_edges) {
  reeb::ReebGraph g;
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < n_nodes; ++i) g.add_node("v" + std::to_string(i), uniform());
  for (int i = 1; i < n_nodes; ++i)
    g.add_edge(static_cast<reeb::NodeIndex>(i),
               static_cast<reeb::NodeIndex>(rng() % static_cast<std::uint64_t>(i)));
  for (int i = 0; i < extra_edges; ++i) {
    const auto a = static_cast<reeb::NodeIndex>(rng() % n_nodes);
    const auto b = static_cast<reeb::NodeIndex>(rng() % n_nodes);
    if (a != b) g.add_edge(a, b);
  }
  g.finalize();
  return g;
}

// Compares two diagrams on the same graph, reporting the first difference.
inline std::string first_difference(const reeb::PersistenceDiagram& a,
                                    const reeb::PersistenceDiagram& b,
                                    const reeb::ReebGraph& g) {
  const reeb::DiagramDiff diff = reeb::diagram_diff(a, b, g);
  if (diff.empty()) return {};
  std::string msg = a.algorithm + " vs " + b.algorithm + ":";
  for (const reeb::DiagramRow& r : diff.only_a)
    msg += " <(" + std::string(to_string(r.cls)) + " " + r.birth_id + "/" + r.death_id + ")";
  for (const reeb::DiagramRow& r : diff.only_b)
    msg += " >(" + std::string(to_string(r.cls)) + " " + r.birth_id + "/" + r.death_id + ")";
  return msg;
}

}  // namespace fixtures
