#include "aibm/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "aibm/eval.hpp"
#include "aibm/selection.hpp"

using namespace std;
using nlohmann::json;

namespace aibm {

namespace {

const vector<string> kMethods = {"degree", "forward", "reverse", "bis", "greedy_celf"};
const vector<string> kRules = {"pd", "nd", "fd"};

string joined(const vector<string>& xs) {
  string s;
  for (size_t i = 0; i < xs.size(); i++) s += (i ? ", " : "") + xs[i];
  return s;
}

void validate_static(const ExperimentSpec& spec) {
  if (spec.dataset.empty()) throw invalid_argument("experiment: dataset path is empty");
  if (spec.methods.empty() || spec.k_values.empty() || spec.tau_values.empty() || spec.rules.empty())
    throw invalid_argument("experiment: methods, k, tau, and rules must all be nonempty");
  for (const string& m : spec.methods)
    if (find(kMethods.begin(), kMethods.end(), m) == kMethods.end())
      throw invalid_argument("experiment: unknown method '" + m + "' (valid: " + joined(kMethods) + ")");
  for (const string& r : spec.rules)
    if (find(kRules.begin(), kRules.end(), r) == kRules.end())
      throw invalid_argument("experiment: unknown rule '" + r + "' (valid: " + joined(kRules) + ")");
  parse_negative_method(spec.neg_method);
  if (spec.neg_count < 1) throw invalid_argument("experiment: neg_count must be at least 1");
  for (int k : spec.k_values)
    if (k < 0) throw invalid_argument("experiment: k must be non-negative");
  for (int t : spec.tau_values)
    if (t < 0) throw invalid_argument("experiment: tau must be non-negative");
  if (spec.phi < 1 || spec.zeta < 1 || spec.mc_runs < 1 || spec.celf_mc_runs < 1)
    throw invalid_argument("experiment: phi, zeta, mc_runs, and celf_mc_runs must be at least 1");
}

}  // namespace

ExperimentSpec ExperimentSpec::from_json_text(const string& text) {
  json j = json::parse(text);
  if (!j.is_object()) throw invalid_argument("experiment config: top level must be a JSON object");
  const vector<string> known = {"dataset", "directed",     "scheme", "neg_method", "neg_count", "methods",
                                "k",       "tau",          "rules",  "phi",        "zeta",      "mc_runs",
                                "celf_mc_runs", "seed",    "out",    "zero_timings"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (find(known.begin(), known.end(), it.key()) == known.end())
      throw invalid_argument("experiment config: unknown key '" + it.key() + "'");
  ExperimentSpec s;
  s.dataset = j.at("dataset").get<string>();
  if (j.contains("directed")) s.directed = j.at("directed").get<bool>();
  if (j.contains("scheme")) s.scheme = WeightScheme::parse(j.at("scheme").get<string>());
  if (j.contains("neg_method")) s.neg_method = j.at("neg_method").get<string>();
  if (j.contains("neg_count")) s.neg_count = j.at("neg_count").get<int>();
  s.methods = j.at("methods").get<vector<string>>();
  s.k_values = j.at("k").get<vector<int>>();
  s.tau_values = j.at("tau").get<vector<int>>();
  s.rules = j.at("rules").get<vector<string>>();
  if (j.contains("phi")) s.phi = j.at("phi").get<uint64_t>();
  if (j.contains("zeta")) s.zeta = j.at("zeta").get<int>();
  if (j.contains("mc_runs")) s.mc_runs = j.at("mc_runs").get<uint64_t>();
  if (j.contains("celf_mc_runs")) s.celf_mc_runs = j.at("celf_mc_runs").get<uint64_t>();
  if (j.contains("seed")) s.seed = j.at("seed").get<uint64_t>();
  if (j.contains("out")) s.out_dir = j.at("out").get<string>();
  if (j.contains("zero_timings")) s.zero_timings = j.at("zero_timings").get<bool>();
  return s;
}

ExperimentSpec ExperimentSpec::from_json_file(const string& path) {
  ifstream in(path);
  if (!in) throw runtime_error("experiment config: cannot open '" + path + "'");
  stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  validate_static(spec);
  Graph g = load_edge_list_file(spec.dataset, spec.directed, spec.scheme);
  const int max_k = *max_element(spec.k_values.begin(), spec.k_values.end());
  if (spec.neg_count + max_k > g.n)
    throw invalid_argument("experiment: neg_count + max k = " + to_string(spec.neg_count + max_k) + " exceeds n=" +
                           to_string(g.n));

  Rng master(spec.seed);

  // one fixed global priority permutation backs every fd cell
  vector<int> perm(g.n);
  for (int v = 0; v < g.n; v++) perm[v] = v;
  Rng perm_rng = master.substream(0xFDFD);
  for (int v = g.n - 1; v > 0; v--) swap(perm[v], perm[perm_rng.uniform_int(v + 1)]);
  auto rule_by_name = [&](const string& name) {
    if (name == "pd") return TieRule::pd();
    if (name == "nd") return TieRule::nd();
    return TieRule::fd(perm);
  };

  const int neg_tau = *max_element(spec.tau_values.begin(), spec.tau_values.end());
  Rng neg_rng = master.substream(0x5EED);
  vector<int> S = select_negative_seeds(g, spec.neg_count, parse_negative_method(spec.neg_method), neg_tau, neg_rng);

  vector<ExperimentRow> rows;
  uint64_t cell = 0;
  for (const string& method : spec.methods)
    for (int k : spec.k_values)
      for (int tau : spec.tau_values)
        for (const string& rule_name : spec.rules) {
          const TieRule rule = rule_by_name(rule_name);
          Rng cell_rng = master.substream(0xCE11).substream(cell++);
          Rng sel_rng = cell_rng.substream(1);
          SelectionResult sel;
          if (method == "degree")
            sel = select_degree(g, S, k);
          else if (method == "forward")
            sel = select_forward(g, S, k, tau, spec.phi, sel_rng);
          else if (method == "reverse")
            sel = select_reverse(g, S, k, tau, spec.zeta, rule, sel_rng);
          else if (method == "bis")
            sel = bis_select(g, S, k, tau, rule, spec.phi, spec.zeta, sel_rng);
          else
            sel = select_greedy_celf(g, S, k, tau, rule, spec.celf_mc_runs, sel_rng);

          Rng eval_rng = cell_rng.substream(2);
          auto t0 = chrono::steady_clock::now();
          SigmaEstimate est = estimate_sigma_minus(g, S, sel.seeds, tau, rule, spec.mc_runs, eval_rng);
          double eval_ms = chrono::duration<double, milli>(chrono::steady_clock::now() - t0).count();

          ExperimentRow row;
          row.method = method;
          row.neg_method = spec.neg_method;
          row.s_count = spec.neg_count;
          row.k = k;
          row.tau = tau;
          row.rule = rule_name;
          row.sigma_mean = est.mean;
          row.ci_lo = est.ci_lo;
          row.ci_hi = est.ci_hi;
          row.select_ms = spec.zero_timings ? 0.0 : sel.millis;
          row.eval_ms = spec.zero_timings ? 0.0 : eval_ms;
          rows.push_back(std::move(row));
        }

  sort(rows.begin(), rows.end(), [](const ExperimentRow& a, const ExperimentRow& b) {
    if (a.method != b.method) return a.method < b.method;
    if (a.k != b.k) return a.k < b.k;
    if (a.tau != b.tau) return a.tau < b.tau;
    return a.rule < b.rule;
  });

  filesystem::create_directories(spec.out_dir);
  ofstream csv(spec.out_dir + "/results.csv");
  write_rows_csv(rows, csv);
  ofstream js(spec.out_dir + "/results.json");
  write_rows_json(rows, js);
  return rows;
}

void write_rows_csv(const vector<ExperimentRow>& rows, ostream& out) {
  out << "method,neg_method,S,k,tau,rule,sigma_mean,ci_lo,ci_hi,select_ms,eval_ms\n";
  char buf[128];
  for (const ExperimentRow& r : rows) {
    snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f,%.3f,%.3f", r.sigma_mean, r.ci_lo, r.ci_hi, r.select_ms, r.eval_ms);
    out << r.method << ',' << r.neg_method << ',' << r.s_count << ',' << r.k << ',' << r.tau << ',' << r.rule << ','
        << buf << '\n';
  }
}

void write_rows_json(const vector<ExperimentRow>& rows, ostream& out) {
  json arr = json::array();
  for (const ExperimentRow& r : rows) {
    arr.push_back({{"method", r.method},
                   {"neg_method", r.neg_method},
                   {"S", r.s_count},
                   {"k", r.k},
                   {"tau", r.tau},
                   {"rule", r.rule},
                   {"sigma_mean", r.sigma_mean},
                   {"ci_lo", r.ci_lo},
                   {"ci_hi", r.ci_hi},
                   {"select_ms", r.select_ms},
                   {"eval_ms", r.eval_ms}});
  }
  out << arr.dump(2) << '\n';
}

vector<ExperimentRow> read_rows_csv(istream& in) {
  string line;
  if (!getline(in, line)) throw runtime_error("read_rows_csv: empty input");
  if (line != "method,neg_method,S,k,tau,rule,sigma_mean,ci_lo,ci_hi,select_ms,eval_ms")
    throw runtime_error("read_rows_csv: unexpected header '" + line + "'");
  vector<ExperimentRow> rows;
  while (getline(in, line)) {
    if (line.empty()) continue;
    vector<string> f;
    stringstream ss(line);
    string tok;
    while (getline(ss, tok, ',')) f.push_back(tok);
    if (f.size() != 11) throw runtime_error("read_rows_csv: bad row '" + line + "'");
    ExperimentRow r;
    r.method = f[0];
    r.neg_method = f[1];
    r.s_count = stoi(f[2]);
    r.k = stoi(f[3]);
    r.tau = stoi(f[4]);
    r.rule = f[5];
    r.sigma_mean = stod(f[6]);
    r.ci_lo = stod(f[7]);
    r.ci_hi = stod(f[8]);
    r.select_ms = stod(f[9]);
    r.eval_ms = stod(f[10]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace aibm
