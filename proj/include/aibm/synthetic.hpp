#pragma once

#include <cstdint>

#include "aibm/graph.hpp"

namespace aibm {

struct SyntheticModel {
  enum class Kind { ErdosRenyi, BarabasiAlbert };
  Kind kind = Kind::ErdosRenyi;
  int n = 0;
  int edges = 0;   // ErdosRenyi: number of directed edges
  int attach = 0;  // BarabasiAlbert: links added per new node

  static SyntheticModel erdos_renyi(int n, int edges) { return {Kind::ErdosRenyi, n, edges, 0}; }
  static SyntheticModel barabasi_albert(int n, int attach) { return {Kind::BarabasiAlbert, n, 0, attach}; }
};

/* Deterministic per seed. ErdosRenyi draws distinct directed pairs uniformly.
 * BarabasiAlbert grows an undirected preferential-attachment graph (attach
 * initial nodes, each newcomer links to attach distinct existing nodes with
 * probability proportional to degree+1) and emits it bidirected, the same
 * convention used for undirected datasets. Probabilities per scheme. */
Graph generate_synthetic(const SyntheticModel& model, uint64_t seed,
                         const WeightScheme& scheme = WeightScheme::weighted_cascade());

}  // namespace aibm
