#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aibm/graph.hpp"

namespace aibm {

/* One experiment sweep: a dataset, one negative-seed configuration, and the
 * cross product of positive methods x k x tau x rule. Loaded from a JSON
 * config whose keys mirror these fields. */
struct ExperimentSpec {
  std::string dataset;
  bool directed = false;
  WeightScheme scheme = WeightScheme::weighted_cascade();
  std::string neg_method = "degree";
  int neg_count = 1;
  std::vector<std::string> methods;  // degree | forward | reverse | bis | greedy_celf
  std::vector<int> k_values;
  std::vector<int> tau_values;
  std::vector<std::string> rules;  // pd | nd | fd
  uint64_t phi = 10000;            // forward-sampling budget
  int zeta = 20;                   // reverse samples per head
  uint64_t mc_runs = 10000;        // paired evaluation runs per cell
  uint64_t celf_mc_runs = 1000;    // gain-estimation runs inside greedy_celf
  uint64_t seed = 1;
  std::string out_dir = "out";
  bool zero_timings = false;  // report 0 ms so reruns are byte-identical

  static ExperimentSpec from_json_text(const std::string& text);
  static ExperimentSpec from_json_file(const std::string& path);
};

struct ExperimentRow {
  std::string method, neg_method;
  int s_count = 0, k = 0, tau = 0;
  std::string rule;
  double sigma_mean = 0.0, ci_lo = 0.0, ci_hi = 0.0;
  double select_ms = 0.0, eval_ms = 0.0;
};

/* Loads the dataset, draws the negative seeds once, runs every cell with an
 * rng stream derived from (master seed, cell index), and writes results.csv
 * and results.json under out_dir. Rows come back sorted by (method, k, tau,
 * rule). Byte-identical across reruns apart from the timing columns (exactly
 * identical with zero_timings). */
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

// header: method,neg_method,S,k,tau,rule,sigma_mean,ci_lo,ci_hi,select_ms,eval_ms
void write_rows_csv(const std::vector<ExperimentRow>& rows, std::ostream& out);
void write_rows_json(const std::vector<ExperimentRow>& rows, std::ostream& out);
std::vector<ExperimentRow> read_rows_csv(std::istream& in);

}  // namespace aibm
