#include "aibm/synthetic.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "aibm/rng.hpp"

using namespace std;

namespace aibm {

static void assign_probabilities(Graph& g, const WeightScheme& scheme) {
  switch (scheme.kind) {
    case WeightScheme::Kind::Constant:
      if (!(scheme.c >= 0.0 && scheme.c <= 1.0))
        throw invalid_argument("generate_synthetic: constant probability outside [0,1]");
      for (Edge& e : g.edges) e.p = scheme.c;
      break;
    case WeightScheme::Kind::WeightedCascade:
      for (Edge& e : g.edges) e.p = 1.0 / g.in_degree(e.dst);
      break;
    case WeightScheme::Kind::FromFile:
      throw invalid_argument("generate_synthetic: FromFile scheme has no meaning for generated graphs");
  }
}

Graph generate_synthetic(const SyntheticModel& model, uint64_t seed, const WeightScheme& scheme) {
  Rng rng(seed);
  vector<Edge> edges;
  switch (model.kind) {
    case SyntheticModel::Kind::ErdosRenyi: {
      const int n = model.n;
      const long long max_edges = (long long)n * (n - 1);
      if (n < 1) throw invalid_argument("generate_synthetic: ErdosRenyi needs n >= 1");
      if (model.edges < 0 || model.edges > max_edges)
        throw invalid_argument("generate_synthetic: ErdosRenyi edge count infeasible");
      unordered_set<uint64_t> seen;
      seen.reserve(model.edges * 2);
      while ((int)edges.size() < model.edges) {
        int u = rng.uniform_int(n), v = rng.uniform_int(n);
        if (u == v) continue;
        uint64_t key = (uint64_t)(uint32_t)u << 32 | (uint32_t)v;
        if (seen.insert(key).second) edges.push_back({u, v, 0.0});
      }
      break;
    }
    case SyntheticModel::Kind::BarabasiAlbert: {
      const int n = model.n, a = model.attach;
      if (a < 1 || n <= a) throw invalid_argument("generate_synthetic: BarabasiAlbert needs 1 <= attach < n");
      vector<int> urn;  // each node appears degree+1 times (once at birth)
      for (int v = 0; v < a; v++) urn.push_back(v);
      for (int v = a; v < n; v++) {
        vector<int> targets;
        while ((int)targets.size() < a) {
          int t = urn[rng.uniform_int((int)urn.size())];
          if (find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        sort(targets.begin(), targets.end());
        urn.push_back(v);
        for (int t : targets) {
          edges.push_back({t, v, 0.0});
          edges.push_back({v, t, 0.0});
          urn.push_back(t);
          urn.push_back(v);
        }
      }
      break;
    }
  }
  Graph g = make_graph(model.n, std::move(edges), model.kind == SyntheticModel::Kind::ErdosRenyi);
  assign_probabilities(g, scheme);
  return g;
}

}  // namespace aibm
