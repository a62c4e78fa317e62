#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aibm/diffusion.hpp"
#include "aibm/graph.hpp"
#include "aibm/rng.hpp"
#include "aibm/sampling.hpp"

namespace aibm {

struct SelectionResult {
  std::string method;
  std::vector<int> seeds;              // in selection order
  std::vector<double> marginal_scores; // score credited to each pick
  double millis = 0.0;                 // wall time of the whole selection call

  std::string to_json() const;  // {"method":..,"seeds":[..],"marginals":[..],"ms":..}
};

/* Rescue scores with the inverted index joining candidates, samples, and
 * head hazards. score[u] always equals the hazard sum of the uncovered
 * samples containing u; the greedy loop maintains that incrementally by
 * discounting exactly the samples it newly covers. */
struct RescueState {
  std::vector<double> score;               // 0 for negative seeds
  std::vector<double> head_hazard;         // per sample: H(head)
  std::vector<std::vector<int>> coverage;  // node -> sample ids it appears in
  std::vector<std::vector<int>> members;   // sample -> its candidate nodes
  std::vector<uint8_t> covered;            // per sample
  std::vector<uint8_t> eligible;           // selectable nodes (non-seeds)
};

// Requires every sample pruned (candidates filled) and every head present in
// h; hazards are read off h at the heads.
RescueState build_rescue_state(const std::vector<RRSet>& samples, const SusceptibilityList& h);

// k rounds of cover-and-discount on st; appends picks and their marginal
// scores. Ties break toward the lowest id, scores clamp at 0.
void greedy_rescue(RescueState& st, int k, std::vector<int>& picks, std::vector<double>& gains);

/* BIS: forward sampling for head hazards, zeta reverse samples per candidate
 * head, rule-specific pruning, then k greedy rounds over rescue scores.
 * Ties always break toward the lowest node id; scores are clamped at 0. */
SelectionResult bis_select(const Graph& g, const std::vector<int>& neg_seeds, int k, int tau, const TieRule& rule,
                           uint64_t phi, int zeta, Rng& rng);

// bis_select with phi = budget.fis_count and zeta = the larger RIS sample
// count divided evenly over the candidate heads (rounded up).
SelectionResult bis_select_budget(const Graph& g, const std::vector<int>& neg_seeds, int k, int tau,
                                  const TieRule& rule, const SampleBudget& budget, Rng& rng);

// Same sampling and pruning as bis_select but every sample weighs 1.
SelectionResult select_reverse(const Graph& g, const std::vector<int>& neg_seeds, int k, int tau, int zeta,
                               const TieRule& rule, Rng& rng);

// Top-k candidates by estimated susceptibility, ties by ascending id.
SelectionResult select_forward(const Graph& g, const std::vector<int>& neg_seeds, int k, int tau, uint64_t phi,
                               Rng& rng);

// Top-k candidates by out-degree.
SelectionResult select_degree(const Graph& g, const std::vector<int>& neg_seeds, int k);

/* Lazy greedy on Monte Carlo estimates of the blocking gain. Gains within a
 * round share one pre-drawn batch of worlds (common random numbers), so
 * candidate comparisons see identical noise. eval_count, if given, receives
 * the number of gain evaluations performed. */
SelectionResult select_greedy_celf(const Graph& g, const std::vector<int>& neg_seeds, int k, int tau,
                                   const TieRule& rule, uint64_t mc_runs, Rng& rng, uint64_t* eval_count = nullptr);

enum class NegativeMethod { Degree, PageRank, RisGreedy };
NegativeMethod parse_negative_method(const std::string& name);

/* Picks the adversary's seeds. RisGreedy is plain influence maximization:
 * greedy max coverage over tau-truncated reverse samples from uniformly
 * random heads (no stopping rule, no pruning), ris_samples of them
 * (0 = default budget max(10000, 20n)). */
std::vector<int> select_negative_seeds(const Graph& g, int m, NegativeMethod method, int tau, Rng& rng,
                                       uint64_t ris_samples = 0);

}  // namespace aibm
