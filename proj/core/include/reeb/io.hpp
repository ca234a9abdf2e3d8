#pragma once

#include <string>
#include <vector>

#include "reeb/diagram.hpp"
#include "reeb/graph.hpp"

namespace reeb {

/// GraphFile: {"format":"reeb-graph","version":1,
///             "nodes":[{"id":str,"f":number},...],"edges":[[id,id],...]}
/// Conditioned graphs additionally carry "synthetic" and "ord" per node so
/// that conditioning provenance and the placement of synthetic nodes survive
/// a save/load round trip. Serialization is canonical: node and edge order
/// follow the graph, numbers use shortest round-trip form.
ReebGraph graph_from_json(const std::string& text);
std::string graph_to_json(const ReebGraph& g);

ReebGraph load_graph(const std::string& path);
void save_graph(const std::string& path, const ReebGraph& g);

/// DiagramFile: CSV `class,birth_id,death_id,birth_f,death_f,synthetic,global`
/// in canonical row order.
std::string diagram_to_csv(const std::vector<DiagramRow>& rows);
std::vector<DiagramRow> diagram_from_csv(const std::string& text);

std::vector<DiagramRow> load_diagram(const std::string& path);
void save_diagram(const std::string& path, const std::vector<DiagramRow>& rows);

/// Two-panel SVG: the ordinary diagram (min-saddle red, saddle-max blue) and
/// the extended diagram (cycles purple). Each pair renders as exactly one
/// circle at (birth f, death f).
std::string diagram_to_svg(const std::vector<DiagramRow>& rows);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace reeb
