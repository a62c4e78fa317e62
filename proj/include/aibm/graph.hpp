#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aibm {

struct Edge {
  int src;
  int dst;
  double p;
};

/* Directed influence graph. Nodes are dense ids 0..n-1; adjacency is CSR in
 * both directions, storing edge ids so callers can reach p(u,v) and per-edge
 * coins. Invariants: p in [0,1], no self-loops, no duplicate (src,dst). */
struct Graph {
  int n = 0;
  std::vector<Edge> edges;
  bool directed_input = true;
  std::vector<std::string> labels;  // original file tokens; empty for synthetic graphs

  std::vector<int> out_start, out_edges;  // edge ids leaving v: out_edges[out_start[v] .. out_start[v+1])
  std::vector<int> in_start, in_edges;    // edge ids entering v

  int m() const { return static_cast<int>(edges.size()); }
  int out_degree(int v) const { return out_start[v + 1] - out_start[v]; }
  int in_degree(int v) const { return in_start[v + 1] - in_start[v]; }
  std::string summary_json() const;  // {"n":..,"m":..,"directed":..}
};

/* Edge probability assignment. WeightedCascade is the default convention:
 * p(u,v) = 1 / in-degree(v). FromFile takes the third edge-list column. */
struct WeightScheme {
  enum class Kind { Constant, WeightedCascade, FromFile };
  Kind kind = Kind::WeightedCascade;
  double c = 0.1;

  static WeightScheme constant(double c);
  static WeightScheme weighted_cascade() { return {Kind::WeightedCascade, 0.0}; }
  static WeightScheme from_file() { return {Kind::FromFile, 0.0}; }
  static WeightScheme parse(const std::string& text);  // "wc" | "const:<p>" | "file"
  std::string to_string() const;
};

// Validates invariants and builds both adjacency indexes.
Graph make_graph(int n, std::vector<Edge> edges, bool directed_input = true);

/* KONECT-style loader: `%` or `#` comment lines, whitespace-separated
 * `u v [w]` data lines, arbitrary tokens remapped to 0..n-1 in first
 * appearance order. Undirected input doubles each edge. Self-loops are
 * dropped, duplicates collapsed keeping the first. Probabilities are
 * assigned after the structure is final, so WeightedCascade sees true
 * in-degrees. */
Graph load_edge_list(std::istream& in, bool directed, const WeightScheme& scheme);
Graph load_edge_list_file(const std::string& path, bool directed, const WeightScheme& scheme);

// Writes `label_u label_v p` per edge; loading the result with directed=true
// and FromFile reproduces the graph exactly.
void save_edge_list(const Graph& g, std::ostream& out);

// m nodes not in excluded, by out-degree descending, ties by ascending id.
std::vector<int> top_out_degree(const Graph& g, int m, const std::vector<int>& excluded);

/* Standard PageRank: uniform teleport, dangling mass redistributed uniformly,
 * power iteration until L1 change < tol or max_iters. */
std::vector<double> pagerank(const Graph& g, double damping, double tol, int max_iters);

}  // namespace aibm
