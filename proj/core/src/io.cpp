#include "reeb/io.hpp"
#include <unordered_map>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace reeb {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string shortest_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::logic_error("double formatting failed");
  return std::string(buf, ptr);
}

[[noreturn]] void bad_graph(const std::string& what) {
  throw std::runtime_error("invalid graph file: " + what);
}

}  // namespace

ReebGraph graph_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) bad_graph("top level is not an object");
  if (doc.value("format", "") != "reeb-graph") bad_graph("format is not 'reeb-graph'");
  if (doc.value("version", 0) != 1) bad_graph("unsupported version");
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) bad_graph("missing nodes array");
  if (!doc.contains("edges") || !doc["edges"].is_array()) bad_graph("missing edges array");

  ReebGraph g;
  std::unordered_map<std::string, NodeIndex> index;
  bool any_ord = false, any_plain = false;
  for (const auto& jn : doc["nodes"]) {
    if (!jn.is_object() || !jn.contains("id") || !jn["id"].is_string() ||
        !jn.contains("f") || !jn["f"].is_number())
      bad_graph("node entries need a string id and a numeric f");
    const std::string id = jn["id"].get<std::string>();
    const double f = jn["f"].get<double>();
    if (!std::isfinite(f)) bad_graph("non-finite f on node '" + id + "'");
    NodeIndex v;
    if (jn.contains("ord")) {
      if (!jn["ord"].is_number_integer()) bad_graph("'ord' must be an integer");
      any_ord = true;
      v = g.add_node(id, f, jn["ord"].get<std::int64_t>(), jn.value("synthetic", false));
    } else {
      any_plain = true;
      v = g.add_node(id, f);
    }
    index.emplace(id, v);
  }
  if (any_ord && any_plain) bad_graph("either every node carries 'ord' or none does");

  for (const auto& je : doc["edges"]) {
    if (!je.is_array() || je.size() != 2 || !je[0].is_string() || !je[1].is_string())
      bad_graph("edge entries must be [id, id]");
    const auto a = index.find(je[0].get<std::string>());
    const auto b = index.find(je[1].get<std::string>());
    if (a == index.end() || b == index.end())
      bad_graph("edge references unknown node '" +
                (a == index.end() ? je[0] : je[1]).get<std::string>() + "'");
    try {
      g.add_edge(a->second, b->second);
    } catch (const std::exception& e) {
      bad_graph(e.what());
    }
  }
  try {
    g.finalize();
  } catch (const std::exception& e) {
    bad_graph(e.what());
  }
  return g;
}

std::string graph_to_json(const ReebGraph& g) {
  bool any_synthetic = false;
  for (NodeIndex v = 0; v < g.node_count(); ++v)
    if (g.node(v).synthetic) any_synthetic = true;

  std::ostringstream out;
  out << "{\"format\":\"reeb-graph\",\"version\":1,\"nodes\":[";
  for (NodeIndex v = 0; v < g.node_count(); ++v) {
    const GraphNode& nd = g.node(v);
    if (v) out << ',';
    out << "{\"id\":" << ordered_json(nd.id).dump() << ",\"f\":" << shortest_double(nd.f);
    if (any_synthetic) {
      out << ",\"ord\":" << nd.ord;
      if (nd.synthetic) out << ",\"synthetic\":true";
    }
    out << '}';
  }
  out << "],\"edges\":[";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (e) out << ',';
    out << '[' << ordered_json(g.node(g.edge(e).a).id).dump() << ','
        << ordered_json(g.node(g.edge(e).b).id).dump() << ']';
  }
  out << "]}\n";
  return out.str();
}

ReebGraph load_graph(const std::string& path) {
  return graph_from_json(read_text_file(path));
}

void save_graph(const std::string& path, const ReebGraph& g) {
  write_text_file(path, graph_to_json(g));
}

namespace {

bool needs_csv_quotes(const std::string& s) {
  return s.find_first_of(",\"\n\r") != std::string::npos;
}

std::string csv_field(const std::string& s) {
  if (!needs_csv_quotes(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

[[noreturn]] void bad_diagram(const std::string& what) {
  throw std::runtime_error("invalid diagram file: " + what);
}

double parse_double(const std::string& s) {
  double x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    bad_diagram("bad number '" + s + "'");
  return x;
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  bad_diagram("bad boolean '" + s + "'");
}

}  // namespace

std::string diagram_to_csv(const std::vector<DiagramRow>& rows) {
  std::ostringstream out;
  out << "class,birth_id,death_id,birth_f,death_f,synthetic,global\n";
  for (const DiagramRow& r : rows) {
    out << to_string(r.cls) << ',' << csv_field(r.birth_id) << ','
        << csv_field(r.death_id) << ',' << shortest_double(r.birth_f) << ','
        << shortest_double(r.death_f) << ',' << (r.synthetic ? "true" : "false")
        << ',' << (r.global ? "true" : "false") << '\n';
  }
  return out.str();
}

std::vector<DiagramRow> diagram_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) bad_diagram("empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "class,birth_id,death_id,birth_f,death_f,synthetic,global")
    bad_diagram("unexpected header '" + line + "'");

  std::vector<DiagramRow> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 7) bad_diagram("expected 7 fields, got " + std::to_string(f.size()));
    DiagramRow r;
    if (f[0] == "min-saddle") r.cls = PairClass::MinSaddle;
    else if (f[0] == "saddle-max") r.cls = PairClass::SaddleMax;
    else if (f[0] == "cycle") r.cls = PairClass::Cycle;
    else bad_diagram("unknown class '" + f[0] + "'");
    r.birth_id = f[1];
    r.death_id = f[2];
    r.birth_f = parse_double(f[3]);
    r.death_f = parse_double(f[4]);
    r.synthetic = parse_bool(f[5]);
    r.global = parse_bool(f[6]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<DiagramRow> load_diagram(const std::string& path) {
  return diagram_from_csv(read_text_file(path));
}

void save_diagram(const std::string& path, const std::vector<DiagramRow>& rows) {
  write_text_file(path, diagram_to_csv(rows));
}

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Panel {
  double x0 = 0;  // canvas origin
  static constexpr double size = 360;
  double lo = 0, hi = 1;  // data range

  double sx(double v) const { return x0 + (v - lo) / (hi - lo) * size; }
  double sy(double v) const { return 50 + size - (v - lo) / (hi - lo) * size; }
};

void panel_range(Panel& p, const std::vector<const DiagramRow*>& rows) {
  if (rows.empty()) return;
  double lo = rows.front()->birth_f, hi = lo;
  for (const DiagramRow* r : rows) {
    lo = std::min({lo, r->birth_f, r->death_f});
    hi = std::max({hi, r->birth_f, r->death_f});
  }
  const double pad = (hi - lo) * 0.06 + 1e-9;
  p.lo = lo - pad;
  p.hi = hi + pad;
}

void render_panel(std::ostringstream& svg, const Panel& p, const std::string& title,
                  const std::vector<const DiagramRow*>& rows) {
  svg << "<rect x=\"" << p.x0 << "\" y=\"50\" width=\"" << Panel::size
      << "\" height=\"" << Panel::size
      << "\" fill=\"white\" stroke=\"#444444\"/>\n";
  svg << "<text x=\"" << p.x0 + Panel::size / 2
      << "\" y=\"34\" text-anchor=\"middle\" font-size=\"16\">" << xml_escape(title)
      << "</text>\n";
  // diagonal
  svg << "<line x1=\"" << p.sx(p.lo) << "\" y1=\"" << p.sy(p.lo) << "\" x2=\""
      << p.sx(p.hi) << "\" y2=\"" << p.sy(p.hi)
      << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
  // range labels
  svg << "<text x=\"" << p.x0 << "\" y=\"" << 50 + Panel::size + 18
      << "\" font-size=\"11\">" << p.lo << "</text>\n";
  svg << "<text x=\"" << p.x0 + Panel::size << "\" y=\"" << 50 + Panel::size + 18
      << "\" text-anchor=\"end\" font-size=\"11\">" << p.hi << "</text>\n";
  svg << "<text x=\"" << p.x0 + Panel::size / 2 << "\" y=\"" << 50 + Panel::size + 34
      << "\" text-anchor=\"middle\" font-size=\"12\">birth f</text>\n";

  for (const DiagramRow* r : rows) {
    const char* color = r->cls == PairClass::MinSaddle   ? "#d62728"
                        : r->cls == PairClass::SaddleMax ? "#1f77b4"
                                                         : "#9467bd";
    svg << "<circle cx=\"" << p.sx(r->birth_f) << "\" cy=\"" << p.sy(r->death_f)
        << "\" r=\"3.5\" fill=\"" << color << "\"";
    if (r->global) svg << " stroke=\"black\" stroke-width=\"1.2\"";
    svg << "><title>" << xml_escape(r->birth_id) << " / " << xml_escape(r->death_id)
        << "</title></circle>\n";
  }
}

}  // namespace

std::string diagram_to_svg(const std::vector<DiagramRow>& rows) {
  std::vector<const DiagramRow*> ordinary, cycles;
  for (const DiagramRow& r : rows)
    (r.cls == PairClass::Cycle ? cycles : ordinary).push_back(&r);

  Panel left{50};
  Panel right{50 + Panel::size + 70};
  panel_range(left, ordinary);
  panel_range(right, cycles);

  std::ostringstream svg;
  const double width = right.x0 + Panel::size + 50;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"470\" viewBox=\"0 0 " << width << " 470\">\n";
  render_panel(svg, left, "Dg0", ordinary);
  render_panel(svg, right, "eDg1", cycles);
  svg << "</svg>\n";
  return svg.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace reeb
