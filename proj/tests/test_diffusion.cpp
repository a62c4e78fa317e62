#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "aibm/diffusion.hpp"
#include "aibm/graph.hpp"
#include "aibm/rng.hpp"
#include "oracles.hpp"

using namespace aibm;
using std::vector;

namespace {

Graph lift(const oracle::TinyGraph& t) {
  vector<Edge> es;
  for (size_t e = 0; e < t.edges.size(); e++) es.push_back({t.edges[e].first, t.edges[e].second, t.p[e]});
  return make_graph(t.n, std::move(es));
}

oracle::TinyGraph random_instance(std::mt19937_64& gen, int n_lo, int n_hi, int m_max) {
  static const double probs[] = {0.3, 0.5, 0.7, 1.0};
  oracle::TinyGraph t;
  t.n = n_lo + (int)(gen() % (n_hi - n_lo + 1));
  std::set<std::pair<int, int>> used;
  const int want = 1 + (int)(gen() % m_max);
  for (int tries = 0; (int)t.edges.size() < want && tries < 200; tries++) {
    int u = (int)(gen() % t.n), v = (int)(gen() % t.n);
    if (u == v || used.count({u, v})) continue;
    used.insert({u, v});
    t.edges.push_back({u, v});
    t.p.push_back(probs[gen() % 4]);
  }
  return t;
}

vector<int> random_perm(std::mt19937_64& gen, int n) {
  vector<int> perm(n);
  for (int i = 0; i < n; i++) perm[i] = i;
  for (int i = n - 1; i > 0; i--) std::swap(perm[i], perm[(int)(gen() % (i + 1))]);
  return perm;
}

vector<char> live_flags(uint32_t mask, int m) {
  vector<char> f(m);
  for (int e = 0; e < m; e++) f[e] = (mask >> e & 1) != 0;
  return f;
}

}  // namespace

TEST_CASE("tie rule construction and names") {
  CHECK(TieRule::pd().name() == "pd");
  CHECK(TieRule::nd().name() == "nd");
  CHECK(TieRule::fd({2, 0, 1}).name() == "fd");
  CHECK_THROWS_AS(TieRule::fd({0, 0, 1}), std::invalid_argument);  // repeated rank
  CHECK_THROWS_AS(TieRule::fd({0, 1, 3}), std::invalid_argument);  // out of range
}

TEST_CASE("single cascade on a sure path respects the round budget") {
  Graph g = make_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  Rng rng(1);
  DiffusionOutcome one = simulate_single(g, {0}, 1, rng);
  CHECK(one.negatively_activated == vector<int>{0, 1});
  CHECK(one.positively_activated.empty());
  CHECK(one.activation_time == vector<int>{0, 1, -1});

  DiffusionOutcome two = simulate_single(g, {0}, 2, rng);
  CHECK(two.negatively_activated == vector<int>{0, 1, 2});
  CHECK(two.activation_time == vector<int>{0, 1, 2});

  DiffusionOutcome zero = simulate_single(g, {0}, 0, rng);
  CHECK(zero.negatively_activated == vector<int>{0});
}

TEST_CASE("single cascade activation frequency tracks the edge probability") {
  Graph g = make_graph(2, {{0, 1, 0.5}});
  Rng rng(42);
  int hits = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; i++) {
    DiffusionOutcome o = simulate_single(g, {0}, 1, rng);
    if (o.negatively_activated.size() == 2) hits++;
  }
  double rate = (double)hits / trials;
  CHECK(rate > 0.48);
  CHECK(rate < 0.52);
}

TEST_CASE("simulation argument validation") {
  Graph g = make_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  Rng rng(1);
  CHECK_THROWS_AS(simulate_single(g, {}, 1, rng), std::invalid_argument);
  CHECK_THROWS_AS(simulate_single(g, {5}, 1, rng), std::invalid_argument);
  CHECK_THROWS_AS(simulate_single(g, {0}, -1, rng), std::invalid_argument);
  CHECK_THROWS_AS(simulate_competitive(g, {0}, {0}, 1, TieRule::nd(), rng), std::invalid_argument);
  CHECK_THROWS_AS(simulate_competitive(g, {0}, {1}, 1, TieRule::fd({0, 1}), rng), std::invalid_argument);
}

TEST_CASE("simultaneous arrival resolves per rule on the diamond meet") {
  // 0 and 1 both point at 2 with certainty; polarity of 2 is pure tie-break
  Graph g = make_graph(3, {{0, 2, 1.0}, {1, 2, 1.0}});
  Rng rng(1);

  DiffusionOutcome pd = simulate_competitive(g, {0}, {1}, 1, TieRule::pd(), rng);
  CHECK(pd.positively_activated == vector<int>{1, 2});
  CHECK(pd.negatively_activated == vector<int>{0});

  DiffusionOutcome nd = simulate_competitive(g, {0}, {1}, 1, TieRule::nd(), rng);
  CHECK(nd.negatively_activated == vector<int>{0, 2});

  DiffusionOutcome fd_pos = simulate_competitive(g, {0}, {1}, 1, TieRule::fd({0, 1, 2}), rng);
  CHECK(fd_pos.positively_activated == vector<int>{1, 2});  // rank(1) > rank(0)

  DiffusionOutcome fd_neg = simulate_competitive(g, {0}, {1}, 1, TieRule::fd({1, 0, 2}), rng);
  CHECK(fd_neg.negatively_activated == vector<int>{0, 2});  // rank(0) > rank(1)
}

TEST_CASE("world enumeration covers every coin pattern exactly once") {
  SUBCASE("one uncertain edge") {
    Graph g = make_graph(2, {{0, 1, 0.3}});
    vector<double> probs(2, -1.0);
    enumerate_live_edge_graphs(g, [&](const LiveEdgeGraph& L) { probs[L.live_mask] = L.probability; });
    CHECK(probs[0] == doctest::Approx(0.7));
    CHECK(probs[1] == doctest::Approx(0.3));
  }
  SUBCASE("degenerate probabilities visit one world with mass") {
    Graph g = make_graph(3, {{0, 1, 1.0}, {1, 2, 0.0}});
    double total = 0.0;
    int massy = 0;
    enumerate_live_edge_graphs(g, [&](const LiveEdgeGraph& L) {
      total += L.probability;
      if (L.probability > 0) {
        massy++;
        CHECK(L.live_mask == 1u);  // only edge 0 live
      }
    });
    CHECK(total == doctest::Approx(1.0));
    CHECK(massy == 1);
  }
  SUBCASE("probabilities sum to one on a random graph") {
    std::mt19937_64 gen(9);
    Graph g = lift(random_instance(gen, 5, 7, 10));
    double total = 0.0;
    int worlds = 0;
    enumerate_live_edge_graphs(g, [&](const LiveEdgeGraph& L) {
      total += L.probability;
      worlds++;
    });
    CHECK(worlds == 1 << g.m());
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("enumeration guard") {
    vector<Edge> big;
    for (int v = 1; v <= 26; v++) big.push_back({0, v, 0.5});
    Graph g = make_graph(27, big);
    CHECK_THROWS_AS(enumerate_live_edge_graphs(g, [](const LiveEdgeGraph&) {}), std::invalid_argument);
  }
}

TEST_CASE("within one world the blocker shields downstream nodes") {
  // path 0 -> 1 -> 2, all edges live, positive seed at 1 cuts the chain
  Graph g = make_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  LiveEdgeGraph all{3u, 1.0};
  DiffusionOutcome o = outcome_in_live_edge(all, g, {0}, {1}, 2, TieRule::nd());
  CHECK(o.negatively_activated == vector<int>{0});
  CHECK(o.positively_activated == vector<int>{1, 2});
  CHECK(o.activation_time == vector<int>{0, 0, 1});
}

TEST_CASE("per-world outcomes match an independent reference process") {
  std::mt19937_64 gen(1234);
  for (int inst = 0; inst < 12; inst++) {
    oracle::TinyGraph t = random_instance(gen, 4, 5, 7);
    Graph g = lift(t);
    vector<int> perm = random_perm(gen, t.n);
    int s = (int)(gen() % t.n);
    int a = (s + 1 + (int)(gen() % (t.n - 1))) % t.n;
    const int tau = 1 + (int)(gen() % 3);
    struct Variant {
      TieRule rule;
      oracle::Rule oracle_rule;
    };
    const Variant variants[] = {{TieRule::pd(), oracle::Rule::PD},
                                {TieRule::nd(), oracle::Rule::ND},
                                {TieRule::fd(perm), oracle::Rule::FD}};
    enumerate_live_edge_graphs(g, [&](const LiveEdgeGraph& L) {
      vector<char> live = live_flags(L.live_mask, g.m());
      for (const Variant& var : variants) {
        DiffusionOutcome got = outcome_in_live_edge(L, g, {s}, {a}, tau, var.rule);
        oracle::WorldOutcome want = oracle::run_world(t, live, {s}, {a}, tau, var.oracle_rule, perm);
        REQUIRE(vector<int>(want.neg.begin(), want.neg.end()) == got.negatively_activated);
        REQUIRE(vector<int>(want.pos.begin(), want.pos.end()) == got.positively_activated);
        for (int v = 0; v < g.n; v++) {
          int wt = want.time.count(v) ? want.time[v] : -1;
          REQUIRE(got.activation_time[v] == wt);
        }
      }
    });
  }
}

TEST_CASE("every node lands in exactly one state") {
  std::mt19937_64 gen(77);
  oracle::TinyGraph t = random_instance(gen, 6, 6, 10);
  Graph g = lift(t);
  Rng rng(5);
  for (int i = 0; i < 500; i++) {
    DiffusionOutcome o = simulate_competitive(g, {0}, {1}, 3, TieRule::nd(), rng);
    vector<int> state(g.n, 0);
    for (int v : o.negatively_activated) state[v]++;
    for (int v : o.positively_activated) state[v] += 2;
    for (int v = 0; v < g.n; v++) {
      REQUIRE(state[v] < 3);  // never both
      REQUIRE((state[v] != 0) == (o.activation_time[v] >= 0));
    }
    CHECK(o.activation_time[0] == 0);
    CHECK(o.activation_time[1] == 0);
  }
}

TEST_CASE("longer horizons only extend the infected set in any fixed world") {
  std::mt19937_64 gen(31);
  for (int inst = 0; inst < 8; inst++) {
    oracle::TinyGraph t = random_instance(gen, 4, 6, 8);
    Graph g = lift(t);
    vector<int> perm = random_perm(gen, t.n);
    int s = (int)(gen() % t.n);
    int a = (s + 1) % t.n;
    for (const TieRule& rule : {TieRule::pd(), TieRule::nd(), TieRule::fd(perm)}) {
      enumerate_live_edge_graphs(g, [&](const LiveEdgeGraph& L) {
        std::set<int> prev;
        for (int tau = 0; tau <= t.n; tau++) {
          DiffusionOutcome o = outcome_in_live_edge(L, g, {s}, {a}, tau, rule);
          std::set<int> cur(o.negatively_activated.begin(), o.negatively_activated.end());
          REQUIRE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
          prev = cur;
        }
      });
    }
  }
}

TEST_CASE("a horizon of n rounds already reaches the untruncated fixpoint") {
  std::mt19937_64 gen(53);
  for (int inst = 0; inst < 8; inst++) {
    oracle::TinyGraph t = random_instance(gen, 4, 6, 8);
    Graph g = lift(t);
    vector<int> perm = random_perm(gen, t.n);
    for (const TieRule& rule : {TieRule::pd(), TieRule::nd(), TieRule::fd(perm)}) {
      enumerate_live_edge_graphs(g, [&](const LiveEdgeGraph& L) {
        DiffusionOutcome at_n = outcome_in_live_edge(L, g, {0}, {1}, g.n, rule);
        DiffusionOutcome deep = outcome_in_live_edge(L, g, {0}, {1}, 10 * g.n, rule);
        REQUIRE(at_n.negatively_activated == deep.negatively_activated);
        REQUIRE(at_n.positively_activated == deep.positively_activated);
        REQUIRE(at_n.activation_time == deep.activation_time);
      });
    }
  }
}

TEST_CASE("tie rules bracket each other inside every world") {
  std::mt19937_64 gen(99);
  for (int inst = 0; inst < 10; inst++) {
    oracle::TinyGraph t = random_instance(gen, 4, 6, 8);
    Graph g = lift(t);
    vector<int> perm = random_perm(gen, t.n);
    const int tau = 1 + (int)(gen() % 3);
    enumerate_live_edge_graphs(g, [&](const LiveEdgeGraph& L) {
      auto pos_of = [&](const TieRule& r) {
        DiffusionOutcome o = outcome_in_live_edge(L, g, {0}, {1}, tau, r);
        return std::set<int>(o.positively_activated.begin(), o.positively_activated.end());
      };
      std::set<int> nd = pos_of(TieRule::nd());
      std::set<int> fd = pos_of(TieRule::fd(perm));
      std::set<int> pd = pos_of(TieRule::pd());
      REQUIRE(std::includes(fd.begin(), fd.end(), nd.begin(), nd.end()));
      REQUIRE(std::includes(pd.begin(), pd.end(), fd.begin(), fd.end()));
    });
  }
}

TEST_CASE("Monte Carlo negative counts agree with exact enumeration") {
  std::mt19937_64 gen(4242);
  oracle::TinyGraph t = random_instance(gen, 5, 6, 9);
  Graph g = lift(t);
  double exact = oracle::expected_negatives(t, {0}, {1}, 3, oracle::Rule::ND, {});
  Rng rng(7);
  const int trials = 20000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < trials; i++) {
    double c = (double)simulate_competitive(g, {0}, {1}, 3, TieRule::nd(), rng).negatively_activated.size();
    sum += c;
    sumsq += c * c;
  }
  double mean = sum / trials;
  double se = std::sqrt((sumsq / trials - mean * mean) / trials);
  CHECK(std::abs(mean - exact) <= 4.0 * se + 1e-12);
}

TEST_CASE("outcome serialization shape") {
  Graph g = make_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  LiveEdgeGraph all{3u, 1.0};
  DiffusionOutcome o = outcome_in_live_edge(all, g, {0}, {1}, 2, TieRule::nd());
  CHECK(o.to_json() == "{\"neg\":[0],\"pos\":[1,2],\"t\":{\"0\":0,\"1\":0,\"2\":1}}");
}
