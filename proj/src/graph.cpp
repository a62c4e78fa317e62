#include "aibm/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

using namespace std;

namespace aibm {

string Graph::summary_json() const {
  ostringstream os;
  os << "{\"n\":" << n << ",\"m\":" << m() << ",\"directed\":" << (directed_input ? "true" : "false") << "}";
  return os.str();
}

WeightScheme WeightScheme::constant(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw invalid_argument("WeightScheme: constant probability must be in [0,1]");
  return {Kind::Constant, c};
}

WeightScheme WeightScheme::parse(const string& text) {
  if (text == "wc") return weighted_cascade();
  if (text == "file") return from_file();
  if (text.rfind("const:", 0) == 0) {
    size_t used = 0;
    double c = stod(text.substr(6), &used);
    if (used != text.size() - 6) throw invalid_argument("WeightScheme: bad constant in '" + text + "'");
    return constant(c);
  }
  throw invalid_argument("WeightScheme: unknown scheme '" + text + "' (expected wc, const:<p>, or file)");
}

string WeightScheme::to_string() const {
  switch (kind) {
    case Kind::WeightedCascade: return "wc";
    case Kind::FromFile: return "file";
    case Kind::Constant: return "const:" + std::to_string(c);
  }
  return "?";
}

static void build_adjacency(Graph& g) {
  g.out_start.assign(g.n + 1, 0);
  g.in_start.assign(g.n + 1, 0);
  for (const Edge& e : g.edges) {
    g.out_start[e.src + 1]++;
    g.in_start[e.dst + 1]++;
  }
  for (int v = 0; v < g.n; v++) {
    g.out_start[v + 1] += g.out_start[v];
    g.in_start[v + 1] += g.in_start[v];
  }
  g.out_edges.assign(g.edges.size(), 0);
  g.in_edges.assign(g.edges.size(), 0);
  vector<int> op(g.out_start.begin(), g.out_start.end() - 1);
  vector<int> ip(g.in_start.begin(), g.in_start.end() - 1);
  for (int e = 0; e < g.m(); e++) {
    g.out_edges[op[g.edges[e].src]++] = e;
    g.in_edges[ip[g.edges[e].dst]++] = e;
  }
}

Graph make_graph(int n, vector<Edge> edges, bool directed_input) {
  if (n < 0) throw invalid_argument("make_graph: negative node count");
  unordered_set<uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw invalid_argument("make_graph: edge endpoint out of range");
    if (e.src == e.dst) throw invalid_argument("make_graph: self-loop not allowed");
    if (!(e.p >= 0.0 && e.p <= 1.0)) throw invalid_argument("make_graph: edge probability outside [0,1]");
    uint64_t key = (uint64_t)(uint32_t)e.src << 32 | (uint32_t)e.dst;
    if (!seen.insert(key).second) throw invalid_argument("make_graph: duplicate edge");
  }
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.directed_input = directed_input;
  build_adjacency(g);
  return g;
}

Graph load_edge_list(istream& in, bool directed, const WeightScheme& scheme) {
  if (scheme.kind == WeightScheme::Kind::Constant && !(scheme.c >= 0.0 && scheme.c <= 1.0))
    throw invalid_argument("load_edge_list: constant probability outside [0,1]");

  unordered_map<string, int> ids;
  vector<string> labels;
  auto intern = [&](const string& tok) {
    auto it = ids.find(tok);
    if (it != ids.end()) return it->second;
    int id = (int)labels.size();
    ids.emplace(tok, id);
    labels.push_back(tok);
    return id;
  };

  struct RawEdge { int u, v; double w; };
  vector<RawEdge> raw;
  unordered_set<uint64_t> seen;
  bool need_weight = scheme.kind == WeightScheme::Kind::FromFile;
  string line;
  long line_no = 0;
  long data_lines = 0;
  while (getline(in, line)) {
    line_no++;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == string::npos) continue;
    if (line[start] == '%' || line[start] == '#') continue;
    data_lines++;
    istringstream ls(line);
    string tu, tv, tw;
    if (!(ls >> tu >> tv))
      throw runtime_error("load_edge_list: malformed line " + to_string(line_no) + ": '" + line + "'");
    double w = 0.0;
    if (ls >> tw) {
      size_t used = 0;
      try {
        w = stod(tw, &used);
      } catch (const exception&) {
        used = 0;
      }
      if (used != tw.size())
        throw runtime_error("load_edge_list: non-numeric weight on line " + to_string(line_no) + ": '" + tw + "'");
    } else if (need_weight) {
      throw runtime_error("load_edge_list: missing weight column on line " + to_string(line_no));
    }
    if (need_weight && !(w >= 0.0 && w <= 1.0))
      throw runtime_error("load_edge_list: weight outside [0,1] on line " + to_string(line_no));
    int u = intern(tu), v = intern(tv);
    auto add = [&](int a, int b) {
      if (a == b) return;  // self-loop dropped
      uint64_t key = (uint64_t)(uint32_t)a << 32 | (uint32_t)b;
      if (seen.insert(key).second) raw.push_back({a, b, w});
    };
    add(u, v);
    if (!directed) add(v, u);
  }
  if (data_lines == 0) throw runtime_error("load_edge_list: empty input");

  Graph g;
  g.n = (int)labels.size();
  g.labels = std::move(labels);
  g.directed_input = directed;
  g.edges.reserve(raw.size());
  for (const RawEdge& e : raw) g.edges.push_back({e.u, e.v, e.w});
  build_adjacency(g);

  // probabilities assigned after structure so WeightedCascade sees final in-degrees
  switch (scheme.kind) {
    case WeightScheme::Kind::Constant:
      for (Edge& e : g.edges) e.p = scheme.c;
      break;
    case WeightScheme::Kind::WeightedCascade:
      for (Edge& e : g.edges) e.p = 1.0 / g.in_degree(e.dst);
      break;
    case WeightScheme::Kind::FromFile:
      break;  // already carried through
  }
  return g;
}

Graph load_edge_list_file(const string& path, bool directed, const WeightScheme& scheme) {
  ifstream in(path);
  if (!in) throw runtime_error("load_edge_list: cannot open '" + path + "'");
  return load_edge_list(in, directed, scheme);
}

void save_edge_list(const Graph& g, ostream& out) {
  out.precision(17);
  for (const Edge& e : g.edges) {
    if (g.labels.empty())
      out << e.src << ' ' << e.dst << ' ' << e.p << '\n';
    else
      out << g.labels[e.src] << ' ' << g.labels[e.dst] << ' ' << e.p << '\n';
  }
}

vector<int> top_out_degree(const Graph& g, int m, const vector<int>& excluded) {
  vector<char> ex(g.n, 0);
  for (int v : excluded) {
    if (v < 0 || v >= g.n) throw invalid_argument("top_out_degree: excluded id out of range");
    ex[v] = 1;
  }
  vector<int> pool;
  for (int v = 0; v < g.n; v++)
    if (!ex[v]) pool.push_back(v);
  if (m < 0 || m > (int)pool.size())
    throw invalid_argument("top_out_degree: requested " + to_string(m) + " of " + to_string(pool.size()) +
                           " available nodes");
  sort(pool.begin(), pool.end(), [&](int a, int b) {
    int da = g.out_degree(a), db = g.out_degree(b);
    if (da != db) return da > db;
    return a < b;
  });
  pool.resize(m);
  return pool;
}

vector<double> pagerank(const Graph& g, double damping, double tol, int max_iters) {
  if (g.n == 0) throw invalid_argument("pagerank: empty graph");
  if (!(damping > 0.0 && damping < 1.0)) throw invalid_argument("pagerank: damping must be in (0,1)");
  if (!(tol > 0.0)) throw invalid_argument("pagerank: tolerance must be positive");
  vector<double> x(g.n, 1.0 / g.n), next(g.n);
  for (int it = 0; it < max_iters; it++) {
    double dangling = 0.0;
    for (int v = 0; v < g.n; v++)
      if (g.out_degree(v) == 0) dangling += x[v];
    double base = (1.0 - damping) / g.n + damping * dangling / g.n;
    fill(next.begin(), next.end(), base);
    for (int v = 0; v < g.n; v++) {
      if (g.out_degree(v) == 0) continue;
      double share = damping * x[v] / g.out_degree(v);
      for (int i = g.out_start[v]; i < g.out_start[v + 1]; i++) next[g.edges[g.out_edges[i]].dst] += share;
    }
    double delta = 0.0;
    for (int v = 0; v < g.n; v++) delta += fabs(next[v] - x[v]);
    x.swap(next);
    if (delta < tol) break;
  }
  return x;
}

}  // namespace aibm
