#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "aibm/diffusion.hpp"
#include "aibm/graph.hpp"
#include "aibm/rng.hpp"

namespace aibm {

/* Forward-sampling output: h[v] estimates the probability that v is infected
 * by the negative seeds within tau rounds. Seeds themselves carry no entry
 * (has() is false for them). */
struct SusceptibilityList {
  std::vector<double> h;         // 0 for seeds and never-activated nodes
  std::vector<uint8_t> is_seed;  // 1 for negative seeds
  uint64_t phi = 0;              // simulations used

  bool has(int v) const { return !is_seed[v]; }
};

SusceptibilityList fis(const Graph& g, const std::vector<int>& neg_seeds, uint64_t phi, int tau, Rng& rng);

/* One reverse-reachable sample rooted at head. layers[h] holds the nodes
 * first reached at reverse depth h (layers[0] = {head}); expansion stops as
 * soon as a layer contains a negative seed, so seeds can only sit in the last
 * layer. Only samples that hit a seed are retained (ris_sample returns empty
 * otherwise). candidates is filled by prune_rr. */
struct RRSet {
  int head = -1;
  std::vector<std::vector<int>> layers;
  int first_negative_layer = -1;           // h*, index of the last layer
  std::vector<int> negatives_hit;          // B = layers[h*] intersect S
  std::vector<int> candidates;             // C: pruned node set minus seeds, ascending
  std::unordered_map<int, int> parent;     // node -> first discoverer; head absent

  std::string to_json() const;  // {"head":v,"layers":[[...],...],"hstar":h,"B":[...],"C":[...]}
};

std::optional<RRSet> ris_sample(const Graph& g, const std::vector<int>& neg_seeds, int head, int tau, Rng& rng);

/* Rule-specific pruning of a raw retained sample:
 *   PD keeps every layer through h*;
 *   ND keeps layers 0..h*-1 plus the seeds B;
 *   FD additionally keeps last-layer non-seeds whose branch outranks the
 *   branch of b* (the highest-priority seed in B): walk parent links from the
 *   node and from b* toward the head until the paths first meet, then compare
 *   the priority ranks of the two children of the meeting node.
 * candidates = kept nodes minus seeds, sorted ascending. */
RRSet prune_rr(const RRSet& raw, const TieRule& rule);

/* Simulation/sample budgets from the estimation-error bounds. */
struct SampleBudget {
  uint64_t fis_count = 0;   // R
  uint64_t ris_theta1 = 0;  // theta(1)
  uint64_t ris_theta2 = 0;  // theta(2)
};

// R = ceil(3 / (gamma^2 * h_floor) * ln(2 / (n * delta3))); h_floor is the
// caller's lower bound on the true susceptibility being estimated.
uint64_t fis_sample_count(double gamma, double h_floor, int n, double delta3);

// theta(1) = ceil(2 n ln(1/delta1) / (opt_lb * eps1^2)), clamped to >= 1;
// theta(2) = ceil((2 - 2/e) n ln(C(n,k)/delta2) / (opt_lb * (eps - (1-1/e) eps1)^2)),
// with ln C(n,k) via lgamma. opt_lb is a caller-supplied lower bound on OPT.
std::pair<uint64_t, uint64_t> ris_sample_counts(int n, int k, double eps, double eps1, double delta1, double delta2,
                                                double opt_lb);

}  // namespace aibm
