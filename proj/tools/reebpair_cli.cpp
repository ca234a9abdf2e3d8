// Command-line frontend: condition, pair, diff, generate, cut-cycles, bench
// and plot subcommands over the graph/diagram file formats.
//
// Exit codes: 0 success, 1 semantic difference (diff), 2 usage, 3 input error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reeb/bench.hpp"
#include "reeb/condition.hpp"
#include "reeb/diagram.hpp"
#include "reeb/generators.hpp"
#include "reeb/io.hpp"
#include "reeb/multipass.hpp"
#include "reeb/oracle.hpp"
#include "reeb/singlepass.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiff = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") std::cout << text;
  else reeb::write_text_file(out_path, text);
}

// Splices a component tag into a path: out.json -> out_c2.json.
std::string component_path(const std::string& path, std::size_t i) {
  const std::size_t slash = path.find_last_of('/');
  const std::size_t dot = path.find_last_of('.');
  const std::string tag = "_c" + std::to_string(i);
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + tag;
  return path.substr(0, dot) + tag + path.substr(dot);
}

std::string report_json(const reeb::ConditioningReport& rep) {
  std::string out = "{\"inserted\":[";
  for (std::size_t i = 0; i < rep.inserted.size(); ++i)
    out += (i ? ",\"" : "\"") + rep.inserted[i] + "\"";
  out += "],\"removed\":[";
  for (std::size_t i = 0; i < rep.removed.size(); ++i)
    out += (i ? ",\"" : "\"") + rep.removed[i] + "\"";
  out += "]}\n";
  return out;
}

reeb::ReebGraph load_conditioned(const std::string& path) {
  reeb::ReebGraph g = reeb::load_graph(path);
  if (!reeb::is_conditioned(g)) {
    std::cerr << "note: input is not conditioned; conditioning it first\n";
    g = reeb::condition(g).graph;
    if (!g.connected())
      throw std::runtime_error(
          "input has several components; run `condition --split-components` "
          "and pair them individually");
  }
  return g;
}

int cmd_condition(const std::string& in, const std::string& out,
                  const std::string& report_path, bool split) {
  const reeb::ReebGraph g = reeb::load_graph(in);
  if (split) {
    const std::vector<reeb::ReebGraph> parts = reeb::split_components(g);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      reeb::ConditionResult res = reeb::condition(parts[i]);
      const std::string path =
          out.empty() ? component_path(in, i) : component_path(out, i);
      reeb::save_graph(path, res.graph);
      std::cerr << path << ": " << res.graph.node_count() << " nodes, +"
                << res.report.inserted.size() << " inserted, -"
                << res.report.removed.size() << " removed\n";
    }
    return kExitOk;
  }
  reeb::ConditionResult res = reeb::condition(g);
  if (!res.graph.connected())
    std::cerr << "warning: output is not connected; pairing engines will "
                 "refuse it (use --split-components)\n";
  emit(out, reeb::graph_to_json(res.graph));
  if (!report_path.empty()) reeb::write_text_file(report_path, report_json(res.report));
  else
    std::cerr << "conditioned: +" << res.report.inserted.size() << " inserted, -"
              << res.report.removed.size() << " removed\n";
  return kExitOk;
}

int cmd_pair(const std::string& in, const std::string& algo, const std::string& sweep,
             bool no_virtual_edges, const std::string& out, const std::string& svg) {
  const reeb::ReebGraph g = load_conditioned(in);

  reeb::PersistenceDiagram d;
  if (algo == "multipass") {
    d = reeb::pair_multipass(g);
  } else if (algo == "oracle") {
    d = reeb::oracle_diagram(g);
  } else {
    reeb::SinglePassOptions opt;
    opt.mode = sweep == "asc"    ? reeb::SweepMode::Ascending
               : sweep == "desc" ? reeb::SweepMode::Descending
                                 : reeb::SweepMode::Auto;
    opt.virtual_edges = !no_virtual_edges;
    d = reeb::pair_singlepass(g, opt);
  }

  const std::vector<reeb::DiagramRow> rows = reeb::diagram_rows(d, g);
  emit(out, reeb::diagram_to_csv(rows));
  if (!svg.empty()) reeb::write_text_file(svg, reeb::diagram_to_svg(rows));
  std::cerr << d.algorithm << ": " << rows.size() << " pairs\n";
  return kExitOk;
}

int cmd_diff(const std::string& a_path, const std::string& b_path) {
  const reeb::DiagramDiff diff =
      reeb::diagram_diff(reeb::load_diagram(a_path), reeb::load_diagram(b_path));
  if (diff.empty()) {
    std::cout << "diagrams are equal\n";
    return kExitOk;
  }
  auto print = [](char side, const std::vector<reeb::DiagramRow>& rows) {
    for (const reeb::DiagramRow& r : rows)
      std::cout << side << ' ' << reeb::to_string(r.cls) << ' ' << r.birth_id << '/'
                << r.death_id << " (" << r.birth_f << ", " << r.death_f << ")\n";
  };
  print('<', diff.only_a);
  print('>', diff.only_b);
  return kExitDiff;
}

int cmd_generate(const std::string& kind, std::uint32_t n, std::uint64_t seed,
                 double p2, const std::string& mode, const std::string& out) {
  reeb::GenSpec spec;
  spec.kind = kind == "tree" ? reeb::GenKind::Tree : reeb::GenKind::Graph;
  spec.n = n;
  spec.seed = seed;
  spec.p2 = p2;
  spec.tree_mode = mode == "join" ? reeb::TreeMode::Join : reeb::TreeMode::Split;
  emit(out, reeb::graph_to_json(reeb::generate(spec)));
  return kExitOk;
}

int cmd_cut_cycles(const std::string& in, std::size_t k, std::uint64_t seed,
                   const std::string& out) {
  const reeb::ReebGraph g = load_conditioned(in);
  emit(out, reeb::graph_to_json(reeb::cut_cycles(g, k, seed)));
  return kExitOk;
}

int cmd_bench(const std::string& suite, std::vector<std::uint32_t> sizes, int reps,
              std::uint64_t seed, double p2, std::uint32_t cut_n, int cut_steps,
              const std::string& out) {
  std::vector<reeb::BenchRecord> records;
  if (suite == "trees") {
    if (sizes.empty()) sizes = {100, 500, 1000};
    records = reeb::run_tree_suite(sizes, reps, seed);
  } else if (suite == "graphs") {
    if (sizes.empty()) sizes = {100, 500, 1000};
    records = reeb::run_graph_suite(sizes, reps, seed, p2);
  } else {
    records = reeb::run_cut_suite(cut_n, cut_steps, reps, seed, p2);
  }
  emit(out, reeb::bench_to_csv(records));
  return kExitOk;
}

int cmd_plot(const std::string& in, const std::string& out) {
  emit(out, reeb::diagram_to_svg(reeb::load_diagram(in)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical-point pairing for Reeb graphs"};
  app.require_subcommand(1);

  std::string in, out, report_path, svg_path;
  std::string algo = "singlepass", sweep = "auto", kind, mode = "split", suite;
  bool split_components = false, no_virtual_edges = false;
  std::uint32_t n = 1, cut_n = 5000;
  std::uint64_t seed = 0;
  std::size_t k = 0;
  double p2 = 0.5;
  int reps = 5, cut_steps = 9;
  std::vector<std::uint32_t> sizes;
  std::string diff_a, diff_b;

  CLI::App* c_cond = app.add_subcommand("condition", "Normalize a graph for pairing");
  c_cond->add_option("input", in)->required();
  c_cond->add_option("-o,--output", out, "output path (default: stdout)");
  c_cond->add_option("--report", report_path, "write a JSON conditioning report");
  c_cond->add_flag("--split-components", split_components,
                   "write one conditioned file per connected component");

  CLI::App* c_pair = app.add_subcommand("pair", "Compute a persistence diagram");
  c_pair->add_option("input", in)->required();
  c_pair->add_option("--algo", algo)
      ->check(CLI::IsMember({"multipass", "singlepass", "oracle"}));
  c_pair->add_option("--sweep", sweep)->check(CLI::IsMember({"auto", "asc", "desc"}));
  c_pair->add_flag("--no-virtual-edges", no_virtual_edges,
                   "testing only: disable virtual edges in the single pass");
  c_pair->add_option("-o,--output", out, "diagram CSV path (default: stdout)");
  c_pair->add_option("--svg", svg_path, "also render the diagram as SVG");

  CLI::App* c_diff = app.add_subcommand("diff", "Compare two diagram files");
  c_diff->add_option("a", diff_a)->required();
  c_diff->add_option("b", diff_b)->required();

  CLI::App* c_gen = app.add_subcommand("generate", "Create a synthetic graph");
  c_gen->add_option("--kind", kind)->required()->check(CLI::IsMember({"tree", "graph"}));
  c_gen->add_option("--n", n)->required();
  c_gen->add_option("--seed", seed);
  c_gen->add_option("--p2", p2);
  c_gen->add_option("--mode", mode)->check(CLI::IsMember({"split", "join"}));
  c_gen->add_option("-o,--output", out);

  CLI::App* c_cut = app.add_subcommand("cut-cycles", "Remove k random cycles");
  c_cut->add_option("input", in)->required();
  c_cut->add_option("--k", k)->required();
  c_cut->add_option("--seed", seed);
  c_cut->add_option("-o,--output", out);

  CLI::App* c_bench = app.add_subcommand("bench", "Time the pairing engines");
  c_bench->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"trees", "graphs", "cut"}));
  c_bench->add_option("--sizes", sizes, "sizes for the trees/graphs suites")
      ->delimiter(',');
  c_bench->add_option("--reps", reps);
  c_bench->add_option("--seed", seed);
  c_bench->add_option("--p2", p2);
  c_bench->add_option("--n", cut_n, "base size for the cut suite");
  c_bench->add_option("--steps", cut_steps, "cut counts sampled by the cut suite");
  c_bench->add_option("-o,--output", out);

  CLI::App* c_plot = app.add_subcommand("plot", "Render a diagram CSV as SVG");
  c_plot->add_option("input", in)->required();
  c_plot->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_cond->parsed()) return cmd_condition(in, out, report_path, split_components);
    if (c_pair->parsed()) return cmd_pair(in, algo, sweep, no_virtual_edges, out, svg_path);
    if (c_diff->parsed()) return cmd_diff(diff_a, diff_b);
    if (c_gen->parsed()) return cmd_generate(kind, n, seed, p2, mode, out);
    if (c_cut->parsed()) return cmd_cut_cycles(in, k, seed, out);
    if (c_bench->parsed())
      return cmd_bench(suite, sizes, reps, seed, p2, cut_n, cut_steps, out);
    if (c_plot->parsed()) return cmd_plot(in, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}
