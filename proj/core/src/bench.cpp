#include "reeb/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "reeb/condition.hpp"
#include "reeb/generators.hpp"
#include "reeb/multipass.hpp"
#include "reeb/singlepass.hpp"

namespace reeb {

namespace {

std::string fmt(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

void run_algo(const std::string& algo, const ReebGraph& g) {
  if (algo == "multipass") {
    pair_multipass(g);
  } else if (algo == "single-pass") {
    pair_singlepass(g);
  } else if (algo == "single-pass(asc)") {
    pair_singlepass(g, SinglePassOptions{SweepMode::Ascending, true});
  } else if (algo == "single-pass(desc)") {
    pair_singlepass(g, SinglePassOptions{SweepMode::Descending, true});
  } else {
    throw std::invalid_argument("unknown algo '" + algo + "'");
  }
}

}  // namespace

std::string bench_to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "algo,input,n,cycles,reps,mean_ms,stddev_ms\n";
  for (const BenchRecord& r : records) {
    out << r.algo << ',' << r.input << ',' << r.n << ',' << r.cycles << ','
        << r.reps << ',' << fmt(r.mean_ms) << ',' << fmt(r.stddev_ms) << '\n';
  }
  return out.str();
}

Timing time_repeated(const std::function<void()>& fn, int reps) {
  if (reps < 1) throw std::invalid_argument("reps must be positive");
  std::vector<double> ms(static_cast<std::size_t>(reps));
  for (double& sample : ms) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    sample = std::chrono::duration<double, std::milli>(t1 - t0).count();
  }
  Timing t;
  for (double s : ms) t.mean_ms += s;
  t.mean_ms /= reps;
  for (double s : ms) t.stddev_ms += (s - t.mean_ms) * (s - t.mean_ms);
  t.stddev_ms = std::sqrt(t.stddev_ms / reps);
  std::sort(ms.begin(), ms.end());
  t.median_ms = ms[ms.size() / 2];
  return t;
}

BenchRecord bench_pairing(const std::string& algo, const std::string& input,
                          std::size_t n, const ReebGraph& g, int reps) {
  const Timing t = time_repeated([&] { run_algo(algo, g); }, reps);
  BenchRecord r;
  r.algo = algo;
  r.input = input;
  r.n = n;
  r.cycles = cycle_rank(g);
  r.reps = reps;
  r.mean_ms = t.mean_ms;
  r.stddev_ms = t.stddev_ms;
  r.median_ms = t.median_ms;
  return r;
}

std::vector<BenchRecord> run_tree_suite(const std::vector<std::uint32_t>& sizes,
                                        int reps, std::uint64_t seed) {
  std::vector<BenchRecord> out;
  for (std::uint32_t n : sizes) {
    // The same tree as a split tree and, negated, as a join tree.
    for (TreeMode mode : {TreeMode::Split, TreeMode::Join}) {
      GenSpec spec;
      spec.kind = GenKind::Tree;
      spec.n = n;
      spec.seed = seed;
      spec.tree_mode = mode;
      const ReebGraph g = condition(generate(spec)).graph;
      const std::string input = "random_tree_" + std::to_string(n) +
                                (mode == TreeMode::Split ? "_split" : "_join");
      out.push_back(bench_pairing("multipass", input, n, g, reps));
      out.push_back(bench_pairing("single-pass(asc)", input, n, g, reps));
      out.push_back(bench_pairing("single-pass(desc)", input, n, g, reps));
    }
  }
  return out;
}

std::vector<BenchRecord> run_graph_suite(const std::vector<std::uint32_t>& sizes,
                                         int reps, std::uint64_t seed, double p2) {
  std::vector<BenchRecord> out;
  for (std::uint32_t n : sizes) {
    GenSpec spec;
    spec.kind = GenKind::Graph;
    spec.n = n;
    spec.seed = seed;
    spec.p2 = p2;
    const ReebGraph g = condition(generate(spec)).graph;
    const std::string input = "random_graph_" + std::to_string(n);
    out.push_back(bench_pairing("multipass", input, n, g, reps));
    out.push_back(bench_pairing("single-pass", input, n, g, reps));
  }
  return out;
}

std::vector<BenchRecord> run_cut_suite(std::uint32_t n, int steps, int reps,
                                       std::uint64_t seed, double p2) {
  if (steps < 2) throw std::invalid_argument("cut suite needs at least 2 steps");
  GenSpec spec;
  spec.kind = GenKind::Graph;
  spec.n = n;
  spec.seed = seed;
  spec.p2 = p2;
  const ReebGraph base = condition(generate(spec)).graph;
  const std::size_t rank = cycle_rank(base);

  std::vector<BenchRecord> out;
  for (int i = 0; i < steps; ++i) {
    const std::size_t k = rank * static_cast<std::size_t>(i) / (steps - 1);
    const ReebGraph g = cut_cycles(base, k, seed + i);
    const std::string input =
        "random_graph_" + std::to_string(n) + "_cut" + std::to_string(k);
    out.push_back(bench_pairing("multipass", input, n, g, reps));
    out.push_back(bench_pairing("single-pass", input, n, g, reps));
  }
  return out;
}

}  // namespace reeb
