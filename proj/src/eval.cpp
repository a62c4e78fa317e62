#include "aibm/eval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

using namespace std;

namespace aibm {

namespace {

void check_pair(const Graph& g, const vector<int>& neg, const vector<int>& pos, int tau, const TieRule& rule,
                const char* who) {
  for (int s : neg)
    if (s < 0 || s >= g.n) throw invalid_argument(string(who) + ": negative seed out of range");
  for (int a : pos)
    if (a < 0 || a >= g.n) throw invalid_argument(string(who) + ": positive seed out of range");
  vector<char> in_neg(g.n, 0);
  for (int s : neg) in_neg[s] = 1;
  for (int a : pos)
    if (in_neg[a]) throw invalid_argument(string(who) + ": seed sets overlap at node " + to_string(a));
  if (tau < 0) throw invalid_argument(string(who) + ": tau must be non-negative");
  if (rule.kind == TieRule::Kind::FixedDominance && (int)rule.rank.size() != g.n)
    throw invalid_argument(string(who) + ": FixedDominance rank size differs from node count");
}

}  // namespace

string SigmaEstimate::to_json() const {
  ostringstream os;
  os.precision(12);
  os << "{\"mean\":" << mean << ",\"std_error\":" << std_error << ",\"runs\":" << runs << ",\"ci95\":[" << ci_lo
     << "," << ci_hi << "]}";
  return os.str();
}

SigmaEstimate estimate_sigma_minus(const Graph& g, const vector<int>& neg_seeds, const vector<int>& pos_seeds,
                                   int tau, const TieRule& rule, uint64_t runs, Rng& rng) {
  check_pair(g, neg_seeds, pos_seeds, tau, rule, "estimate_sigma_minus");
  if (runs < 1) throw invalid_argument("estimate_sigma_minus: runs must be at least 1");

  DiffusionEngine eng(g);
  vector<uint8_t> coins(g.m());
  double sum = 0.0, sumsq = 0.0;
  for (uint64_t r = 0; r < runs; r++) {
    for (int e = 0; e < g.m(); e++) coins[e] = rng.uniform() < g.edges[e].p ? 1 : 0;
    auto coin = [&](int e) { return coins[e] != 0; };
    eng.run(neg_seeds, {}, tau, rule, coin);
    const int without = eng.negative_count();
    eng.run(neg_seeds, pos_seeds, tau, rule, coin);
    const double d = without - eng.negative_count();
    sum += d;
    sumsq += d * d;
  }
  SigmaEstimate est;
  est.runs = runs;
  est.mean = sum / (double)runs;
  if (runs > 1) {
    double var = (sumsq - (double)runs * est.mean * est.mean) / (double)(runs - 1);
    if (var < 0.0) var = 0.0;
    est.std_error = sqrt(var / (double)runs);
  }
  est.ci_lo = est.mean - 1.96 * est.std_error;
  est.ci_hi = est.mean + 1.96 * est.std_error;
  return est;
}

double exact_sigma_minus(const Graph& g, const vector<int>& neg_seeds, const vector<int>& pos_seeds, int tau,
                         const TieRule& rule) {
  check_pair(g, neg_seeds, pos_seeds, tau, rule, "exact_sigma_minus");
  if (g.m() > 25)
    throw invalid_argument("exact_sigma_minus: " + to_string(g.m()) + " edges exceeds the 25-edge enumeration guard");
  DiffusionEngine eng(g);
  double acc = 0.0;
  enumerate_live_edge_graphs(g, [&](const LiveEdgeGraph& L) {
    if (L.probability == 0.0) return;
    auto coin = [&](int e) { return (L.live_mask >> e & 1u) != 0; };
    eng.run(neg_seeds, {}, tau, rule, coin);
    const int without = eng.negative_count();
    eng.run(neg_seeds, pos_seeds, tau, rule, coin);
    acc += L.probability * (double)(without - eng.negative_count());
  });
  return acc;
}

string SubmodularityReport::to_json() const {
  ostringstream os;
  os.precision(12);
  os << "{\"checks\":" << checks_performed << ",\"max_violation\":" << max_violation << ",\"violations\":[";
  for (size_t i = 0; i < violations.size(); i++) {
    const SubmodularityViolation& v = violations[i];
    os << (i ? "," : "") << "{\"kind\":\"" << v.kind << "\",\"A\":[";
    for (size_t j = 0; j < v.A.size(); j++) os << (j ? "," : "") << v.A[j];
    os << "],\"B\":[";
    for (size_t j = 0; j < v.B.size(); j++) os << (j ? "," : "") << v.B[j];
    os << "],\"x\":" << v.x << ",\"lhs\":" << v.lhs_gain << ",\"rhs\":" << v.rhs_gain << "}";
  }
  os << "]}";
  return os.str();
}

SubmodularityReport check_monotone_submodular(const Graph& g, const vector<int>& neg_seeds, int tau,
                                              const TieRule& rule, double tol) {
  check_pair(g, neg_seeds, {}, tau, rule, "check_monotone_submodular");
  if (g.m() > 12)
    throw invalid_argument("check_monotone_submodular: graph exceeds the 12-edge guard");
  vector<char> is_seed(g.n, 0);
  for (int s : neg_seeds) is_seed[s] = 1;
  vector<int> cands;
  for (int v = 0; v < g.n; v++)
    if (!is_seed[v]) cands.push_back(v);
  const int c = (int)cands.size();
  if (c > 6) throw invalid_argument("check_monotone_submodular: more than 6 candidate nodes");

  // exact sigma^- for every candidate subset, one pass over the worlds
  vector<vector<int>> subset(1u << c);
  for (uint32_t m = 0; m < (1u << c); m++)
    for (int i = 0; i < c; i++)
      if (m >> i & 1u) subset[m].push_back(cands[i]);
  vector<double> f(1u << c, 0.0);
  DiffusionEngine eng(g);
  enumerate_live_edge_graphs(g, [&](const LiveEdgeGraph& L) {
    if (L.probability == 0.0) return;
    auto coin = [&](int e) { return (L.live_mask >> e & 1u) != 0; };
    eng.run(neg_seeds, {}, tau, rule, coin);
    const int base = eng.negative_count();
    for (uint32_t m = 1; m < (1u << c); m++) {
      eng.run(neg_seeds, subset[m], tau, rule, coin);
      f[m] += L.probability * (double)(base - eng.negative_count());
    }
  });

  SubmodularityReport rep;
  auto note = [&](const char* kind, uint32_t am, uint32_t bm, int x, double lhs, double rhs) {
    rep.max_violation = max(rep.max_violation, rhs - lhs);
    if (rhs - lhs > tol) {
      SubmodularityViolation v;
      v.kind = kind;
      v.A = subset[am];
      v.B = subset[bm];
      v.x = x;
      v.lhs_gain = lhs;
      v.rhs_gain = rhs;
      rep.violations.push_back(std::move(v));
    }
  };
  for (uint32_t am = 0; am < (1u << c); am++) {
    for (int i = 0; i < c; i++) {
      if (am >> i & 1u) continue;
      rep.checks_performed++;
      // monotonicity: f(A + x) >= f(A)
      note("monotone", am, am, cands[i], f[am | (1u << i)], f[am]);
    }
  }
  for (uint32_t bm = 1; bm < (1u << c); bm++) {
    // proper subsets A of B (the first submask drops B's lowest bit)
    for (uint32_t am = (bm - 1) & bm;; am = (am - 1) & bm) {
      for (int i = 0; i < c; i++) {
        if (bm >> i & 1u) continue;
        rep.checks_performed++;
        // diminishing returns: gain at A >= gain at B for A subset of B
        note("submodular", am, bm, cands[i], f[am | (1u << i)] - f[am], f[bm | (1u << i)] - f[bm]);
      }
      if (am == 0) break;
    }
  }
  return rep;
}

}  // namespace aibm
