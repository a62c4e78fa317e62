#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "aibm/graph.hpp"
#include "aibm/rng.hpp"

namespace aibm {

/* Resolution when positive and negative influence reach an inactive node in
 * the same round: PositiveDominance -> positive wins, NegativeDominance ->
 * negative wins, FixedDominance -> the reaching neighbor with the highest
 * priority rank decides. */
struct TieRule {
  enum class Kind { PositiveDominance, NegativeDominance, FixedDominance };
  Kind kind = Kind::NegativeDominance;
  std::vector<int> rank;  // FixedDominance only: rank[v] in 0..n-1, higher wins

  static TieRule pd() { return {Kind::PositiveDominance, {}}; }
  static TieRule nd() { return {Kind::NegativeDominance, {}}; }
  static TieRule fd(std::vector<int> rank);  // validates the permutation
  std::string name() const;                  // "pd" / "nd" / "fd"
};

struct DiffusionOutcome {
  std::vector<int> negatively_activated;  // sorted, includes negative seeds
  std::vector<int> positively_activated;  // sorted, includes positive seeds
  std::vector<int> activation_time;       // size n; -1 for never-activated nodes
  std::string to_json() const;            // {"neg":[...],"pos":[...],"t":{...}}
};

/* Synchronous-round truncated IC with two competing cascades. One coin per
 * edge per run, shared by both polarities; an edge is attempted at most once
 * (when its source first becomes active and its target is still inactive).
 * Scratch buffers are stamped, not cleared, so the engine can run millions of
 * simulations without reallocation. Coin is any callable edge_id -> bool. */
class DiffusionEngine {
 public:
  explicit DiffusionEngine(const Graph& g)
      : g_(&g),
        stamp_(g.n, 0),
        arr_stamp_(g.n, 0),
        positive_(g.n, 0),
        time_(g.n, 0),
        arr_pos_(g.n, 0),
        arr_neg_(g.n, 0),
        arr_rank_(g.n, 0),
        arr_rank_pol_(g.n, 0) {}

  template <class Coin>
  void run(const std::vector<int>& neg_seeds, const std::vector<int>& pos_seeds, int tau, const TieRule& rule,
           Coin&& coin) {
    const Graph& g = *g_;
    run_id_++;
    order_.clear();
    frontier_.clear();
    neg_count_ = 0;
    for (int s : neg_seeds)
      if (!active(s)) {
        activate(s, false, 0);
        frontier_.push_back(s);
      }
    for (int a : pos_seeds)
      if (!active(a)) {
        activate(a, true, 0);
        frontier_.push_back(a);
      }
    const bool fd = rule.kind == TieRule::Kind::FixedDominance;
    int t = 0;
    while (t < tau && !frontier_.empty()) {
      t++;
      round_id_++;
      touched_.clear();
      for (int u : frontier_) {
        const bool upos = positive_[u] != 0;
        for (int i = g.out_start[u]; i < g.out_start[u + 1]; i++) {
          const int e = g.out_edges[i];
          const int v = g.edges[e].dst;
          if (active(v)) continue;  // no coin spent on already-active targets
          if (!coin(e)) continue;
          if (arr_stamp_[v] != round_id_) {
            arr_stamp_[v] = round_id_;
            arr_pos_[v] = arr_neg_[v] = 0;
            arr_rank_[v] = -1;
            touched_.push_back(v);
          }
          (upos ? arr_pos_[v] : arr_neg_[v]) = 1;
          if (fd && rule.rank[u] > arr_rank_[v]) {
            arr_rank_[v] = rule.rank[u];
            arr_rank_pol_[v] = upos;
          }
        }
      }
      next_.clear();
      for (int v : touched_) {
        bool pos;
        if (arr_pos_[v] && arr_neg_[v]) {
          if (rule.kind == TieRule::Kind::PositiveDominance)
            pos = true;
          else if (rule.kind == TieRule::Kind::NegativeDominance)
            pos = false;
          else
            pos = arr_rank_pol_[v] != 0;
        } else {
          pos = arr_pos_[v] != 0;
        }
        activate(v, pos, t);
        next_.push_back(v);
      }
      frontier_.swap(next_);
    }
  }

  bool active(int v) const { return stamp_[v] == run_id_; }
  bool is_negative(int v) const { return active(v) && !positive_[v]; }
  bool is_positive(int v) const { return active(v) && positive_[v]; }
  int activation_time(int v) const { return active(v) ? time_[v] : -1; }
  const std::vector<int>& activated() const { return order_; }  // activation order
  int negative_count() const { return neg_count_; }

 private:
  void activate(int v, bool pos, int t) {
    stamp_[v] = run_id_;
    positive_[v] = pos ? 1 : 0;
    time_[v] = t;
    order_.push_back(v);
    if (!pos) neg_count_++;
  }

  const Graph* g_;
  uint64_t run_id_ = 0, round_id_ = 0;
  std::vector<uint64_t> stamp_, arr_stamp_;
  std::vector<uint8_t> positive_;
  std::vector<int> time_;
  std::vector<int> frontier_, next_, touched_;
  std::vector<uint8_t> arr_pos_, arr_neg_;
  std::vector<int> arr_rank_;
  std::vector<uint8_t> arr_rank_pol_;
  std::vector<int> order_;
  int neg_count_ = 0;
};

// Single-cascade truncated IC; activated nodes are reported on the negative
// side of the outcome (this is the susceptibility-estimation primitive).
DiffusionOutcome simulate_single(const Graph& g, const std::vector<int>& seeds, int tau, Rng& rng);

DiffusionOutcome simulate_competitive(const Graph& g, const std::vector<int>& neg_seeds,
                                      const std::vector<int>& pos_seeds, int tau, const TieRule& rule, Rng& rng);

/* A possible world: bit e of live_mask tells whether edge e survives its coin
 * flip. probability = prod p(e) over live edges * prod (1-p(e)) over the rest. */
struct LiveEdgeGraph {
  uint32_t live_mask = 0;
  double probability = 1.0;
};

// All 2^m worlds; requires m <= 25.
void enumerate_live_edge_graphs(const Graph& g, const std::function<void(const LiveEdgeGraph&)>& visit);

// Deterministic diffusion inside one world: identical to running the
// simulator with the world's coins injected.
DiffusionOutcome outcome_in_live_edge(const LiveEdgeGraph& L, const Graph& g, const std::vector<int>& neg_seeds,
                                      const std::vector<int>& pos_seeds, int tau, const TieRule& rule);

}  // namespace aibm
