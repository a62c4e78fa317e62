#include "aibm/selection.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

using namespace std;

namespace aibm {

namespace {

double ms_since(chrono::steady_clock::time_point t0) {
  return chrono::duration<double, milli>(chrono::steady_clock::now() - t0).count();
}

void check_selector_args(const Graph& g, const vector<int>& neg_seeds, int k, const char* who) {
  if (neg_seeds.empty()) throw invalid_argument(string(who) + ": negative seed set is empty");
  vector<char> seen(g.n, 0);
  int uniq = 0;
  for (int s : neg_seeds) {
    if (s < 0 || s >= g.n) throw invalid_argument(string(who) + ": seed id out of range");
    if (!seen[s]) {
      seen[s] = 1;
      uniq++;
    }
  }
  if (k < 0 || k > g.n - uniq)
    throw invalid_argument(string(who) + ": k=" + to_string(k) + " exceeds the " + to_string(g.n - uniq) +
                           " available candidates");
}

// argmax over eligible unselected nodes, ties to the lowest id
int best_node(const RescueState& st, const vector<char>& taken) {
  int arg = -1;
  double best = -1.0;
  for (int v = 0; v < (int)st.score.size(); v++) {
    if (taken[v] || !st.eligible[v]) continue;
    if (st.score[v] > best) {
      best = st.score[v];
      arg = v;
    }
  }
  return arg;
}

// the BIS sampling pipeline, shared with select_reverse (which unit-weights it)
vector<RRSet> sample_all_heads(const Graph& g, const vector<int>& neg_seeds, int tau, const TieRule& rule, int zeta,
                               const SusceptibilityList& h, Rng& rng) {
  vector<RRSet> samples;
  for (int v = 0; v < g.n; v++) {
    if (!h.has(v)) continue;
    Rng head_rng = rng.substream(2, (uint64_t)v);
    for (int j = 0; j < zeta; j++) {
      optional<RRSet> raw = ris_sample(g, neg_seeds, v, tau, head_rng);
      if (raw) samples.push_back(prune_rr(*raw, rule));
    }
  }
  return samples;
}

}  // namespace

string SelectionResult::to_json() const {
  ostringstream os;
  os << "{\"method\":\"" << method << "\",\"seeds\":[";
  for (size_t i = 0; i < seeds.size(); i++) os << (i ? "," : "") << seeds[i];
  os << "],\"marginals\":[";
  os.precision(12);
  for (size_t i = 0; i < marginal_scores.size(); i++) os << (i ? "," : "") << marginal_scores[i];
  os << "],\"ms\":" << millis << "}";
  return os.str();
}

void greedy_rescue(RescueState& st, int k, vector<int>& picks, vector<double>& gains) {
  const int n = (int)st.score.size();
  vector<char> taken(n, 0);
  for (int round = 0; round < k; round++) {
    int a = best_node(st, taken);
    if (a < 0) break;  // callers guarantee enough candidates; defensive only
    picks.push_back(a);
    gains.push_back(st.score[a]);
    taken[a] = 1;
    for (int sid : st.coverage[a]) {
      if (st.covered[sid]) continue;
      st.covered[sid] = 1;
      for (int u : st.members[sid]) {
        if (u == a) continue;
        st.score[u] -= st.head_hazard[sid];
        if (st.score[u] < 0.0) st.score[u] = 0.0;
      }
    }
    st.score[a] = 0.0;
  }
}

RescueState build_rescue_state(const vector<RRSet>& samples, const SusceptibilityList& h) {
  const int n = (int)h.h.size();
  RescueState st;
  st.score.assign(n, 0.0);
  st.eligible.assign(n, 0);
  for (int v = 0; v < n; v++) st.eligible[v] = h.has(v) ? 1 : 0;
  st.head_hazard.reserve(samples.size());
  st.members.reserve(samples.size());
  st.coverage.assign(n, {});
  st.covered.assign(samples.size(), 0);
  for (int sid = 0; sid < (int)samples.size(); sid++) {
    const RRSet& rr = samples[sid];
    if (rr.head < 0 || rr.head >= n || !h.has(rr.head))
      throw invalid_argument("build_rescue_state: sample head " + to_string(rr.head) +
                             " has no susceptibility entry");
    const double hz = h.h[rr.head];
    st.head_hazard.push_back(hz);
    st.members.push_back(rr.candidates);
    for (int u : rr.candidates) {
      st.coverage[u].push_back(sid);
      st.score[u] += hz;
    }
  }
  return st;
}

SelectionResult bis_select(const Graph& g, const vector<int>& neg_seeds, int k, int tau, const TieRule& rule,
                           uint64_t phi, int zeta, Rng& rng) {
  check_selector_args(g, neg_seeds, k, "bis_select");
  if (zeta < 1) throw invalid_argument("bis_select: zeta must be at least 1");
  auto t0 = chrono::steady_clock::now();
  Rng fis_rng = rng.substream(1);
  SusceptibilityList h = fis(g, neg_seeds, phi, tau, fis_rng);
  vector<RRSet> samples = sample_all_heads(g, neg_seeds, tau, rule, zeta, h, rng);
  RescueState st = build_rescue_state(samples, h);
  SelectionResult res;
  res.method = "bis";
  greedy_rescue(st, k, res.seeds, res.marginal_scores);
  res.millis = ms_since(t0);
  return res;
}

SelectionResult bis_select_budget(const Graph& g, const vector<int>& neg_seeds, int k, int tau, const TieRule& rule,
                                  const SampleBudget& budget, Rng& rng) {
  check_selector_args(g, neg_seeds, k, "bis_select_budget");
  if (budget.fis_count < 1) throw invalid_argument("bis_select_budget: fis_count must be at least 1");
  vector<char> seen(g.n, 0);
  int heads = g.n;
  for (int s : neg_seeds) {
    if (!seen[s]) heads--;
    seen[s] = 1;
  }
  if (heads < 1) throw invalid_argument("bis_select_budget: no candidate heads");
  const uint64_t theta = max(budget.ris_theta1, budget.ris_theta2);
  const int zeta = (int)((theta + heads - 1) / heads);
  return bis_select(g, neg_seeds, k, tau, rule, budget.fis_count, max(zeta, 1), rng);
}

SelectionResult select_reverse(const Graph& g, const vector<int>& neg_seeds, int k, int tau, int zeta,
                               const TieRule& rule, Rng& rng) {
  check_selector_args(g, neg_seeds, k, "select_reverse");
  if (zeta < 1) throw invalid_argument("select_reverse: zeta must be at least 1");
  auto t0 = chrono::steady_clock::now();
  SusceptibilityList unit;  // weighs every sample equally
  unit.h.assign(g.n, 1.0);
  unit.is_seed.assign(g.n, 0);
  unit.phi = 1;
  for (int s : neg_seeds) {
    unit.is_seed[s] = 1;
    unit.h[s] = 0.0;
  }
  vector<RRSet> samples = sample_all_heads(g, neg_seeds, tau, rule, zeta, unit, rng);
  RescueState st = build_rescue_state(samples, unit);
  SelectionResult res;
  res.method = "reverse";
  greedy_rescue(st, k, res.seeds, res.marginal_scores);
  res.millis = ms_since(t0);
  return res;
}

SelectionResult select_forward(const Graph& g, const vector<int>& neg_seeds, int k, int tau, uint64_t phi, Rng& rng) {
  check_selector_args(g, neg_seeds, k, "select_forward");
  auto t0 = chrono::steady_clock::now();
  Rng fis_rng = rng.substream(1);
  SusceptibilityList h = fis(g, neg_seeds, phi, tau, fis_rng);
  vector<int> order;
  for (int v = 0; v < g.n; v++)
    if (h.has(v)) order.push_back(v);
  stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (h.h[a] != h.h[b]) return h.h[a] > h.h[b];
    return a < b;
  });
  SelectionResult res;
  res.method = "forward";
  for (int i = 0; i < k; i++) {
    res.seeds.push_back(order[i]);
    res.marginal_scores.push_back(h.h[order[i]]);
  }
  res.millis = ms_since(t0);
  return res;
}

SelectionResult select_degree(const Graph& g, const vector<int>& neg_seeds, int k) {
  check_selector_args(g, neg_seeds, k, "select_degree");
  auto t0 = chrono::steady_clock::now();
  SelectionResult res;
  res.method = "degree";
  res.seeds = top_out_degree(g, k, neg_seeds);
  for (int v : res.seeds) res.marginal_scores.push_back(g.out_degree(v));
  res.millis = ms_since(t0);
  return res;
}

SelectionResult select_greedy_celf(const Graph& g, const vector<int>& neg_seeds, int k, int tau, const TieRule& rule,
                                   uint64_t mc_runs, Rng& rng, uint64_t* eval_count) {
  check_selector_args(g, neg_seeds, k, "select_greedy_celf");
  if (mc_runs < 1) throw invalid_argument("select_greedy_celf: mc_runs must be at least 1");
  auto t0 = chrono::steady_clock::now();

  vector<char> is_seed(g.n, 0);
  for (int s : neg_seeds) is_seed[s] = 1;
  vector<int> cands;
  for (int v = 0; v < g.n; v++)
    if (!is_seed[v]) cands.push_back(v);

  DiffusionEngine eng(g);
  vector<uint8_t> coins((size_t)mc_runs * g.m());
  vector<int> base_negs(mc_runs, 0);
  vector<int> current;  // A so far

  // one shared world batch per round: candidate gains within a round are
  // compared under identical coins
  auto prepare_round = [&](int round) {
    Rng world_rng = rng.substream(3, (uint64_t)round);
    for (uint64_t r = 0; r < mc_runs; r++) {
      uint8_t* c = &coins[(size_t)r * g.m()];
      for (int e = 0; e < g.m(); e++) c[e] = world_rng.uniform() < g.edges[e].p ? 1 : 0;
      eng.run(neg_seeds, current, tau, rule, [&](int e) { return c[e] != 0; });
      base_negs[r] = eng.negative_count();
    }
  };
  uint64_t evals = 0;
  auto gain_of = [&](int u) {
    current.push_back(u);
    long long diff = 0;
    for (uint64_t r = 0; r < mc_runs; r++) {
      const uint8_t* c = &coins[(size_t)r * g.m()];
      eng.run(neg_seeds, current, tau, rule, [&](int e) { return c[e] != 0; });
      diff += base_negs[r] - eng.negative_count();
    }
    current.pop_back();
    evals++;
    return (double)diff / (double)mc_runs;
  };

  // max-heap of (estimated gain, node, round it was estimated in)
  struct Entry {
    double gain;
    int node;
    int round;
  };
  auto cmp = [](const Entry& a, const Entry& b) {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.node > b.node;
  };
  priority_queue<Entry, vector<Entry>, decltype(cmp)> heap(cmp);

  prepare_round(0);
  for (int u : cands) heap.push({gain_of(u), u, 0});

  SelectionResult res;
  res.method = "greedy_celf";
  for (int round = 0; round < k; round++) {
    if (round > 0) prepare_round(round);
    for (;;) {
      Entry top = heap.top();
      heap.pop();
      if (top.round == round) {
        res.seeds.push_back(top.node);
        res.marginal_scores.push_back(top.gain);
        current.push_back(top.node);
        break;
      }
      top.gain = gain_of(top.node);
      top.round = round;
      heap.push(top);
    }
  }
  if (eval_count) *eval_count = evals;
  res.millis = ms_since(t0);
  return res;
}

NegativeMethod parse_negative_method(const string& name) {
  if (name == "degree") return NegativeMethod::Degree;
  if (name == "pagerank") return NegativeMethod::PageRank;
  if (name == "risgreedy") return NegativeMethod::RisGreedy;
  throw invalid_argument("unknown negative-seed method '" + name + "' (valid: degree, pagerank, risgreedy)");
}

vector<int> select_negative_seeds(const Graph& g, int m, NegativeMethod method, int tau, Rng& rng,
                                  uint64_t ris_samples) {
  if (m < 0 || m > g.n) throw invalid_argument("select_negative_seeds: m exceeds node count");
  switch (method) {
    case NegativeMethod::Degree:
      return top_out_degree(g, m, {});
    case NegativeMethod::PageRank: {
      vector<double> pr = pagerank(g, 0.85, 1e-12, 200);
      vector<int> order(g.n);
      for (int v = 0; v < g.n; v++) order[v] = v;
      stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (pr[a] != pr[b]) return pr[a] > pr[b];
        return a < b;
      });
      order.resize(m);
      return order;
    }
    case NegativeMethod::RisGreedy: {
      if (tau < 0) throw invalid_argument("select_negative_seeds: tau must be non-negative");
      uint64_t total = ris_samples ? ris_samples : max<uint64_t>(10000, 20ull * g.n);
      // plain influence-maximization RR sets: random heads, no stopping rule
      vector<vector<int>> node_samples(g.n);
      vector<vector<int>> sample_nodes(total);
      vector<char> visited(g.n, 0);
      vector<int> frontier, next;
      for (uint64_t i = 0; i < total; i++) {
        int head = rng.uniform_int(g.n);
        vector<int>& nodes = sample_nodes[i];
        nodes.push_back(head);
        visited[head] = 1;
        frontier.assign(1, head);
        for (int h = 0; h < tau && !frontier.empty(); h++) {
          next.clear();
          for (int u : frontier) {
            for (int a = g.in_start[u]; a < g.in_start[u + 1]; a++) {
              const int e = g.in_edges[a];
              const int w = g.edges[e].src;
              if (visited[w]) continue;
              if (rng.uniform() >= g.edges[e].p) continue;
              visited[w] = 1;
              next.push_back(w);
              nodes.push_back(w);
            }
          }
          frontier.swap(next);
        }
        for (int v : nodes) {
          node_samples[v].push_back((int)i);
          visited[v] = 0;
        }
      }
      vector<int64_t> count(g.n, 0);
      for (int v = 0; v < g.n; v++) count[v] = (int64_t)node_samples[v].size();
      vector<char> covered(total, 0), taken(g.n, 0);
      vector<int> picks;
      for (int round = 0; round < m; round++) {
        int arg = -1;
        int64_t best = -1;
        for (int v = 0; v < g.n; v++) {
          if (taken[v]) continue;
          if (count[v] > best) {
            best = count[v];
            arg = v;
          }
        }
        picks.push_back(arg);
        taken[arg] = 1;
        for (int sid : node_samples[arg]) {
          if (covered[sid]) continue;
          covered[sid] = 1;
          for (int u : sample_nodes[sid]) count[u]--;
        }
      }
      return picks;
    }
  }
  throw logic_error("select_negative_seeds: unreachable");
}

}  // namespace aibm
