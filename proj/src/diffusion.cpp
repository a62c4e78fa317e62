#include "aibm/diffusion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

using namespace std;

namespace aibm {

TieRule TieRule::fd(vector<int> rank) {
  vector<char> seen(rank.size(), 0);
  for (int r : rank) {
    if (r < 0 || r >= (int)rank.size() || seen[r]) throw invalid_argument("TieRule::fd: rank is not a permutation");
    seen[r] = 1;
  }
  return {Kind::FixedDominance, std::move(rank)};
}

string TieRule::name() const {
  switch (kind) {
    case Kind::PositiveDominance: return "pd";
    case Kind::NegativeDominance: return "nd";
    case Kind::FixedDominance: return "fd";
  }
  return "?";
}

string DiffusionOutcome::to_json() const {
  ostringstream os;
  auto list = [&](const vector<int>& xs) {
    os << '[';
    for (size_t i = 0; i < xs.size(); i++) os << (i ? "," : "") << xs[i];
    os << ']';
  };
  os << "{\"neg\":";
  list(negatively_activated);
  os << ",\"pos\":";
  list(positively_activated);
  os << ",\"t\":{";
  bool first = true;
  for (int v = 0; v < (int)activation_time.size(); v++) {
    if (activation_time[v] < 0) continue;
    os << (first ? "" : ",") << '"' << v << "\":" << activation_time[v];
    first = false;
  }
  os << "}}";
  return os.str();
}

static void check_seeds(const Graph& g, const vector<int>& seeds, const char* who) {
  for (int s : seeds)
    if (s < 0 || s >= g.n) throw invalid_argument(string(who) + ": seed id " + to_string(s) + " out of range");
}

static void check_competitive(const Graph& g, const vector<int>& neg, const vector<int>& pos, int tau,
                              const TieRule& rule, const char* who) {
  check_seeds(g, neg, who);
  check_seeds(g, pos, who);
  if (tau < 0) throw invalid_argument(string(who) + ": tau must be non-negative");
  if (rule.kind == TieRule::Kind::FixedDominance && (int)rule.rank.size() != g.n)
    throw invalid_argument(string(who) + ": FixedDominance rank size differs from node count");
  vector<char> in_neg(g.n, 0);
  for (int s : neg) in_neg[s] = 1;
  for (int a : pos)
    if (in_neg[a]) throw invalid_argument(string(who) + ": seed sets overlap at node " + to_string(a));
}

static DiffusionOutcome extract(const DiffusionEngine& eng, int n) {
  DiffusionOutcome out;
  out.activation_time.assign(n, -1);
  for (int v : eng.activated()) {
    out.activation_time[v] = eng.activation_time(v);
    (eng.is_negative(v) ? out.negatively_activated : out.positively_activated).push_back(v);
  }
  sort(out.negatively_activated.begin(), out.negatively_activated.end());
  sort(out.positively_activated.begin(), out.positively_activated.end());
  return out;
}

DiffusionOutcome simulate_single(const Graph& g, const vector<int>& seeds, int tau, Rng& rng) {
  if (seeds.empty()) throw invalid_argument("simulate_single: seed set is empty");
  check_seeds(g, seeds, "simulate_single");
  if (tau < 0) throw invalid_argument("simulate_single: tau must be non-negative");
  DiffusionEngine eng(g);
  eng.run(seeds, {}, tau, TieRule::nd(), [&](int e) { return rng.uniform() < g.edges[e].p; });
  return extract(eng, g.n);
}

DiffusionOutcome simulate_competitive(const Graph& g, const vector<int>& neg_seeds, const vector<int>& pos_seeds,
                                      int tau, const TieRule& rule, Rng& rng) {
  check_competitive(g, neg_seeds, pos_seeds, tau, rule, "simulate_competitive");
  DiffusionEngine eng(g);
  eng.run(neg_seeds, pos_seeds, tau, rule, [&](int e) { return rng.uniform() < g.edges[e].p; });
  return extract(eng, g.n);
}

void enumerate_live_edge_graphs(const Graph& g, const function<void(const LiveEdgeGraph&)>& visit) {
  if (g.m() > 25)
    throw invalid_argument("enumerate_live_edge_graphs: " + to_string(g.m()) +
                           " edges exceeds the 25-edge enumeration guard; use Monte Carlo estimation instead");
  const uint32_t total = 1u << g.m();
  for (uint32_t mask = 0;; mask++) {
    double p = 1.0;
    for (int e = 0; e < g.m(); e++) p *= (mask >> e & 1u) ? g.edges[e].p : 1.0 - g.edges[e].p;
    visit({mask, p});
    if (mask + 1 == total) break;
  }
}

DiffusionOutcome outcome_in_live_edge(const LiveEdgeGraph& L, const Graph& g, const vector<int>& neg_seeds,
                                      const vector<int>& pos_seeds, int tau, const TieRule& rule) {
  check_competitive(g, neg_seeds, pos_seeds, tau, rule, "outcome_in_live_edge");
  if (g.m() > 25) throw invalid_argument("outcome_in_live_edge: graph exceeds the 25-edge live-edge mask width");
  DiffusionEngine eng(g);
  eng.run(neg_seeds, pos_seeds, tau, rule, [&](int e) { return (L.live_mask >> e & 1u) != 0; });
  return extract(eng, g.n);
}

}  // namespace aibm
