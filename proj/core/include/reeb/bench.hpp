#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "reeb/graph.hpp"

namespace reeb {

/// One benchmark row. Timings cover the pairing call only; generation,
/// conditioning and cutting happen outside the timed region.
struct BenchRecord {
  std::string algo;
  std::string input;
  std::size_t n = 0;       // generator iterations
  std::size_t cycles = 0;  // cycle rank of the timed graph
  int reps = 0;
  double mean_ms = 0;
  double stddev_ms = 0;
  double median_ms = 0;  // not serialized; used by trend checks
};

std::string bench_to_csv(const std::vector<BenchRecord>& records);

struct Timing {
  double mean_ms = 0;
  double stddev_ms = 0;
  double median_ms = 0;
};

Timing time_repeated(const std::function<void()>& fn, int reps);

/// Times an engine on a conditioned graph.
BenchRecord bench_pairing(const std::string& algo, const std::string& input,
                          std::size_t n, const ReebGraph& g, int reps);

std::vector<BenchRecord> run_tree_suite(const std::vector<std::uint32_t>& sizes,
                                        int reps, std::uint64_t seed);
std::vector<BenchRecord> run_graph_suite(const std::vector<std::uint32_t>& sizes,
                                         int reps, std::uint64_t seed, double p2);
std::vector<BenchRecord> run_cut_suite(std::uint32_t n, int steps, int reps,
                                       std::uint64_t seed, double p2);

}  // namespace reeb
