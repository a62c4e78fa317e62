#include "aibm/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

using namespace std;

namespace aibm {

SusceptibilityList fis(const Graph& g, const vector<int>& neg_seeds, uint64_t phi, int tau, Rng& rng) {
  if (neg_seeds.empty()) throw invalid_argument("fis: negative seed set is empty");
  if (phi < 1) throw invalid_argument("fis: phi must be at least 1");
  if (tau < 0) throw invalid_argument("fis: tau must be non-negative");
  for (int s : neg_seeds)
    if (s < 0 || s >= g.n) throw invalid_argument("fis: seed id out of range");

  SusceptibilityList out;
  out.h.assign(g.n, 0.0);
  out.is_seed.assign(g.n, 0);
  out.phi = phi;
  for (int s : neg_seeds) out.is_seed[s] = 1;

  vector<uint64_t> hits(g.n, 0);
  DiffusionEngine eng(g);
  for (uint64_t i = 0; i < phi; i++) {
    eng.run(neg_seeds, {}, tau, TieRule::nd(), [&](int e) { return rng.uniform() < g.edges[e].p; });
    for (int v : eng.activated()) hits[v]++;
  }
  for (int v = 0; v < g.n; v++)
    if (!out.is_seed[v]) out.h[v] = (double)hits[v] / (double)phi;
  return out;
}

string RRSet::to_json() const {
  ostringstream os;
  auto list = [&](const vector<int>& xs) {
    os << '[';
    for (size_t i = 0; i < xs.size(); i++) os << (i ? "," : "") << xs[i];
    os << ']';
  };
  os << "{\"head\":" << head << ",\"layers\":[";
  for (size_t h = 0; h < layers.size(); h++) {
    if (h) os << ',';
    list(layers[h]);
  }
  os << "],\"hstar\":" << first_negative_layer << ",\"B\":";
  list(negatives_hit);
  os << ",\"C\":";
  list(candidates);
  os << "}";
  return os.str();
}

optional<RRSet> ris_sample(const Graph& g, const vector<int>& neg_seeds, int head, int tau, Rng& rng) {
  if (head < 0 || head >= g.n) throw invalid_argument("ris_sample: head out of range");
  if (tau < 0) throw invalid_argument("ris_sample: tau must be non-negative");
  vector<char> is_seed(g.n, 0);
  for (int s : neg_seeds) {
    if (s < 0 || s >= g.n) throw invalid_argument("ris_sample: seed id out of range");
    is_seed[s] = 1;
  }
  if (is_seed[head]) throw invalid_argument("ris_sample: head is a negative seed");

  RRSet rr;
  rr.head = head;
  rr.layers.push_back({head});
  vector<char> visited(g.n, 0);
  visited[head] = 1;
  int h = 0;
  for (;;) {
    // stop checks come before expansion: a layer holding a seed is absorbed,
    // never expanded, so seeds only ever appear in the final layer
    const vector<int>& frontier = rr.layers[h];
    bool hit = false;
    for (int v : frontier)
      if (is_seed[v]) {
        hit = true;
        rr.negatives_hit.push_back(v);
      }
    if (hit) {
      rr.first_negative_layer = h;
      sort(rr.negatives_hit.begin(), rr.negatives_hit.end());
      return rr;
    }
    if (h == tau) return nullopt;
    vector<int> next;
    for (int u : frontier) {
      for (int i = g.in_start[u]; i < g.in_start[u + 1]; i++) {
        const int e = g.in_edges[i];
        const int w = g.edges[e].src;
        if (visited[w]) continue;
        if (rng.uniform() >= g.edges[e].p) continue;
        visited[w] = 1;
        rr.parent.emplace(w, u);
        next.push_back(w);
      }
    }
    if (next.empty()) return nullopt;
    rr.layers.push_back(std::move(next));
    h++;
  }
}

RRSet prune_rr(const RRSet& raw, const TieRule& rule) {
  const int hstar = raw.first_negative_layer;
  if (hstar < 0 || raw.negatives_hit.empty()) throw invalid_argument("prune_rr: sample contains no negative seed");

  vector<int> seeds = raw.negatives_hit;  // sorted by construction
  auto is_seed = [&](int v) { return binary_search(seeds.begin(), seeds.end(), v); };

  RRSet out = raw;
  out.candidates.clear();
  for (int h = 0; h < hstar; h++)
    for (int v : raw.layers[h]) out.candidates.push_back(v);

  switch (rule.kind) {
    case TieRule::Kind::PositiveDominance:
      for (int v : raw.layers[hstar])
        if (!is_seed(v)) out.candidates.push_back(v);
      break;
    case TieRule::Kind::NegativeDominance:
      break;  // last layer contributes only the seeds, which C excludes
    case TieRule::Kind::FixedDominance: {
      if (rule.rank.empty()) throw invalid_argument("prune_rr: FixedDominance rule carries no priority ranks");
      auto rank_of = [&](int v) {
        if (v < 0 || v >= (int)rule.rank.size())
          throw invalid_argument("prune_rr: node id exceeds FixedDominance rank table");
        return rule.rank[v];
      };
      int bstar = seeds[0];
      for (int b : seeds)
        if (rank_of(b) > rank_of(bstar)) bstar = b;
      // path from a last-layer node down to the head via parent links
      auto chain = [&](int v) {
        vector<int> path{v};
        for (int h = hstar; h > 0; h--) path.push_back(raw.parent.at(path.back()));
        return path;
      };
      const vector<int> bpath = chain(bstar);
      for (int u : raw.layers[hstar]) {
        if (is_seed(u)) continue;
        vector<int> upath = chain(u);
        int j = 1;
        while (upath[j] != bpath[j]) j++;
        if (rank_of(upath[j - 1]) > rank_of(bpath[j - 1])) out.candidates.push_back(u);
      }
      break;
    }
  }
  sort(out.candidates.begin(), out.candidates.end());
  return out;
}

uint64_t fis_sample_count(double gamma, double h_floor, int n, double delta3) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw invalid_argument("fis_sample_count: gamma must be in (0,1)");
  if (!(h_floor > 0.0 && h_floor <= 1.0)) throw invalid_argument("fis_sample_count: h_floor must be in (0,1]");
  if (n < 1) throw invalid_argument("fis_sample_count: n must be positive");
  if (!(delta3 > 0.0 && delta3 < 1.0)) throw invalid_argument("fis_sample_count: delta3 must be in (0,1)");
  if (!(n * delta3 < 2.0)) throw invalid_argument("fis_sample_count: n*delta3 must be below 2");
  double r = ceil(3.0 / (gamma * gamma * h_floor) * log(2.0 / (n * delta3)));
  return (uint64_t)r;
}

pair<uint64_t, uint64_t> ris_sample_counts(int n, int k, double eps, double eps1, double delta1, double delta2,
                                           double opt_lb) {
  if (n < 1) throw invalid_argument("ris_sample_counts: n must be positive");
  if (k < 0 || k > n) throw invalid_argument("ris_sample_counts: k must be in [0,n]");
  if (!(delta1 > 0.0 && delta1 <= 1.0) || !(delta2 > 0.0 && delta2 <= 1.0))
    throw invalid_argument("ris_sample_counts: deltas must be in (0,1]");
  if (!(opt_lb > 0.0)) throw invalid_argument("ris_sample_counts: opt_lb must be positive");
  const double shrink = 1.0 - 1.0 / exp(1.0);
  if (!(eps > 0.0)) throw invalid_argument("ris_sample_counts: eps must be positive");
  if (!(eps1 > 0.0 && eps1 < eps / shrink)) throw invalid_argument("ris_sample_counts: eps1 outside (0, eps/(1-1/e))");

  double t1 = ceil(2.0 * n * log(1.0 / delta1) / (opt_lb * eps1 * eps1));
  double ln_binom = lgamma((double)n + 1.0) - lgamma((double)k + 1.0) - lgamma((double)(n - k) + 1.0);
  double denom = opt_lb * pow(eps - shrink * eps1, 2.0);
  double t2 = ceil((2.0 - 2.0 / exp(1.0)) * n * (ln_binom + log(1.0 / delta2)) / denom);
  return {(uint64_t)max(1.0, t1), (uint64_t)max(1.0, t2)};
}

}  // namespace aibm
