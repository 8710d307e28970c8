// abound: vertex bounds, spectra and classification of regular graphs with
// small second eigenvalue.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "abound/atlas.hpp"
#include "abound/bound_core.hpp"
#include "abound/enumerate.hpp"
#include "abound/errors.hpp"
#include "abound/graph6.hpp"
#include "abound/optimizer.hpp"
#include "abound/record.hpp"
#include "abound/spectra.hpp"
#include "abound/tables.hpp"

using namespace abound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

struct Common {
  bool json = false;
  std::string cache_flag;
};

void emit(const Common& common, const ResultRecord& rec, const std::string& human) {
  if (common.json) {
    std::cout << Json(rec).dump(2) << '\n';
  } else {
    std::cout << human;
  }
  if (auto cache = ResultCache::open(common.cache_flag)) cache->append(rec);
}

std::string fmt(double v, int prec = 6) {
  std::ostringstream os;
  os.precision(prec);
  os << v;
  return os.str();
}

std::string describe_combo(const ChebCombo& f) {
  std::ostringstream os;
  os.precision(8);
  bool first = true;
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    double c = f.coeff(j);
    if (c == 0.0) continue;
    if (!first) os << " + ";
    first = false;
    os << c << " V" << j;
  }
  return first ? "0" : os.str();
}

std::string describe_certificate(const BoundCertificate& c) {
  std::ostringstream os;
  os << "k = " << c.k << ", z = " << fmt(c.z) << ", method = " << to_string(c.method) << '\n';
  os << "f = " << describe_combo(c.f) << '\n';
  if (c.m) os << "m = " << *c.m << '\n';
  if (c.s) os << "s = " << fmt(*c.s, 10) << '\n';
  os << "M1 = " << fmt(c.M1, 10) << ", M2 = " << fmt(c.M2, 10) << ", c0 = " << fmt(c.c0, 10) << '\n';
  os << "mass above z >= " << fmt(c.mass_lower_bound(), 10) << '\n';
  os << "vertex bound = " << fmt(c.vertex_bound, 10) << ", so at most " << c.vertex_bound_int
     << " vertices\n";
  return os.str();
}

void dump_samples(const BoundCertificate& c, const std::string& path, int count) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  IntervalSplit split(c.k, c.z);
  out.precision(12);
  out << "# x f(x); I1 = [" << -split.L << ", " << split.z_scaled << "], I2 = [" << split.z_scaled
      << ", " << split.L << "]\n";
  for (int i = 0; i < count; ++i) {
    double x = -split.L + 2.0 * split.L * i / (count - 1);
    out << x << ' ' << c.f(x) << '\n';
  }
}

// ---------------------------------------------------------------- bound

struct BoundArgs {
  int k = 0;
  double z = 0.0;
  std::string method = "best";
  int terms = 7;
  std::optional<double> s;
  std::optional<int> m;
  std::uint64_t seed = 0;
  int restarts = 64;
  int iters = 2000;
  int threads = 0;
  std::string dump;
};

int run_bound(const BoundArgs& a, const Common& common) {
  OptimizerConfig cfg;
  cfg.terms = a.terms;
  cfg.restarts = a.restarts;
  cfg.seed = a.seed;
  cfg.max_iters = a.iters;
  cfg.threads = a.threads;

  Json inputs = {{"k", a.k}, {"z", a.z}, {"method", a.method}};
  if (a.method == "nterm" || a.method == "best") {
    inputs["terms"] = a.terms;
    inputs["restarts"] = a.restarts;
    inputs["iters"] = a.iters;
  }
  if (a.s) inputs["s"] = *a.s;
  if (a.m) inputs["m"] = *a.m;

  std::optional<ResultRecord> cached;
  if (auto cache = ResultCache::open(common.cache_flag)) cached = cache->find("bound", inputs, a.seed);

  BoundCertificate cert;
  if (cached) {
    cert = cached->result.get<BoundCertificate>();
  } else if (a.method == "linear") {
    cert = linear_bound(a.k, a.z);
  } else if (a.method == "two-term" || a.method == "two_term") {
    cert = two_term_bound(a.k, a.z);
  } else if (a.method == "machine") {
    cert = machine_bound(a.k, a.z, a.m, a.s);
  } else if (a.method == "nterm") {
    cert = optimize_nterm(a.k, a.z, cfg);
  } else {
    cert = best_bound(a.k, a.z, cfg);
  }
  if (!a.dump.empty()) dump_samples(cert, a.dump, 401);

  ResultRecord rec{"bound", inputs, Json(cert), utc_timestamp(), kToolVersion, a.seed};
  std::string human = describe_certificate(cert);
  if (cached) human += "(from cache " + ResultCache::open(common.cache_flag)->path().string() + ")\n";
  if (common.json) {
    std::cout << Json(rec).dump(2) << '\n';
  } else {
    std::cout << human;
  }
  if (!cached) {
    if (auto cache = ResultCache::open(common.cache_flag)) cache->append(rec);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  int k = 0;
  double z = 0.0;
  std::optional<int> n_max;
  int budget = 10;
  bool require_complete = false;
  std::string out;
  std::uint64_t seed = 0;
  int threads = 0;
};

int run_classify(const ClassifyArgs& a, const Common& common) {
  ClassifyOptions opts;
  opts.budget = a.budget;
  opts.require_complete = a.require_complete;
  opts.threads = a.threads;
  opts.optimizer.seed = a.seed;
  ClassificationReport rep = classify(a.k, a.z, a.n_max, opts);

  // Re-check every survivor independently of the pipeline.
  std::vector<std::string> problems;
  for (const Survivor& s : rep.survivors) {
    Graph g = from_graph6(s.graph6);
    if (!is_connected(g)) problems.push_back(s.graph6 + " is disconnected");
    if (is_regular(g) != a.k) problems.push_back(s.graph6 + " is not " + std::to_string(a.k) + "-regular");
    if (!(mu1(g) <= a.z + 1e-9)) problems.push_back(s.graph6 + " has mu1 above z");
  }

  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw std::runtime_error("cannot write " + a.out);
    for (const Survivor& s : rep.survivors) out << s.graph6 << '\n';
  }

  Json inputs = {{"k", a.k}, {"z", a.z}, {"budget", a.budget}};
  inputs["n_max"] = a.n_max ? Json(*a.n_max) : Json(nullptr);
  ResultRecord rec{"classify", inputs, Json(rep), utc_timestamp(), kToolVersion, a.seed};

  std::ostringstream os;
  os << "k = " << rep.k << ", z = " << fmt(rep.z) << '\n';
  if (rep.bound) os << "certified vertex bound: " << *rep.bound << " (" << rep.bound_method << ")\n";
  os << "enumerated n <= " << rep.n_max << (rep.complete ? " (complete)" : " (partial: below the bound)")
     << '\n';
  for (auto [n, c] : rep.graphs_per_n) {
    os << "  n = " << n << ": " << c << " graphs, " << rep.survivors_per_n[n] << " with mu1 <= z\n";
  }
  os << "survivors: " << rep.survivors.size() << ", largest on " << rep.realized_max_n << " vertices\n";
  for (const Survivor& s : rep.survivors) {
    os << "  " << s.graph6 << "  n=" << s.n << "  mu1=" << fmt(s.mu1, 10) << "  "
       << s.atlas_name.value_or("(unnamed)") << (s.borderline ? "  [mu1 = z within 1e-7]" : "") << '\n';
  }
  for (const auto& p : problems) os << "INVARIANT FAILURE: " << p << '\n';
  emit(common, rec, os.str());
  return problems.empty() ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  std::string graph6;
  std::string atlas;
  std::string file;
  int mmax = 20;
};

int run_spectrum(const SpectrumArgs& a, const Common& common) {
  int sources = !a.graph6.empty() + !a.atlas.empty() + !a.file.empty();
  if (sources != 1) throw std::invalid_argument("give exactly one of --graph6, --atlas, --file");

  std::vector<std::pair<std::string, Graph>> graphs;
  if (!a.graph6.empty()) {
    graphs.emplace_back(a.graph6, from_graph6(a.graph6));
  } else if (!a.atlas.empty()) {
    AtlasEntry e = atlas_graph(a.atlas);
    graphs.emplace_back(e.name, e.graph);
  } else {
    std::ifstream in(a.file);
    if (!in) throw std::invalid_argument("cannot read " + a.file);
    for (Graph& g : read_graph6_stream(in)) graphs.emplace_back(to_graph6(g), std::move(g));
  }

  Json results = Json::array();
  std::ostringstream os;
  bool all_nonneg = true;
  for (const auto& [label, g] : graphs) {
    Spectrum sp = adjacency_spectrum(g);
    Json r = {{"label", label}, {"n", g.n()}, {"spectrum", sp}};
    os << label << ": n = " << g.n() << '\n';
    os << "  spectrum: " << format_spectrum(sp.values, 9) << '\n';
    if (g.n() >= 2 && is_connected(g)) {
      double m1 = sp.values[1];
      r["mu1"] = m1;
      os << "  mu1 = " << fmt(m1, 12) << '\n';
    } else {
      r["mu1"] = nullptr;
      os << "  mu1: undefined (disconnected)\n";
    }
    if (auto k = is_regular(g); k && *k >= 2 && is_connected(g)) {
      std::vector<double> s = trace_formula_check(g, a.mmax);
      r["trace_formula"] = s;
      double worst = *std::min_element(s.begin(), s.end());
      bool ok = worst >= -1e-7 * g.n();
      all_nonneg = all_nonneg && ok;
      os << "  trace formula S_0..S_" << a.mmax << ": ";
      for (std::size_t m = 0; m < s.size(); ++m) os << (m ? " " : "") << fmt(s[m], 15);
      os << "\n  min S_m = " << fmt(worst, 15) << (ok ? " (nonnegative)" : " (NEGATIVE)") << '\n';
    }
    results.push_back(r);
  }
  Json inputs = {{"graph6", a.graph6}, {"atlas", a.atlas}, {"file", a.file}, {"mmax", a.mmax}};
  ResultRecord rec{"spectrum", inputs, graphs.size() == 1 ? results[0] : results, utc_timestamp(),
                   kToolVersion, 0};
  emit(common, rec, os.str());
  return all_nonneg ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------- verify-tables

struct TablesArgs {
  std::string k_range = "4..10";
  std::uint64_t seed = 0;
  int terms = 7;
  int restarts = 64;
  int iters = 2000;
  int threads = 0;
};

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad --k-range '" + s + "', expected LO..HI");
  }
}

int run_tables(const TablesArgs& a, const Common& common) {
  auto [lo, hi] = parse_range(a.k_range);
  if (lo > hi) throw std::invalid_argument("empty --k-range");
  OptimizerConfig cfg;
  cfg.terms = a.terms;
  cfg.restarts = a.restarts;
  cfg.seed = a.seed;
  cfg.max_iters = a.iters;
  cfg.threads = a.threads;
  std::vector<CellCheck> checks = verify_reference_tables(lo, hi, cfg);

  Json cells = Json::array();
  std::ostringstream os;
  std::vector<std::string> failing;
  for (const CellCheck& c : checks) {
    std::ostringstream line;
    line << "k=" << c.cell.k << " z=" << fmt(c.cell.z) << " paper=" << c.cell.value;
    Json j = {{"k", c.cell.k}, {"z", c.cell.z}, {"paper", c.cell.value}, {"allowed", c.allowed},
              {"pass", c.pass}, {"errors", c.errors}};
    if (c.best) {
      j["certificate"] = *c.best;
      line << " bound=" << c.best->vertex_bound_int << " (" << fmt(c.best->vertex_bound, 8) << ", "
           << to_string(c.best->method) << ")";
    } else {
      line << " bound=none";
    }
    line << (c.cell.z <= 1.0 ? " limit=" : " limit(1.15x)=") << fmt(c.allowed, 6);
    line << (c.pass ? " PASS" : " FAIL");
    if (!c.pass) failing.push_back("k=" + std::to_string(c.cell.k) + " z=" + fmt(c.cell.z));
    os << line.str() << '\n';
    cells.push_back(j);
  }
  if (failing.empty()) {
    os << "all " << checks.size() << " cells PASS\n";
  } else {
    os << failing.size() << " failing cell(s):";
    for (const auto& f : failing) os << ' ' << f;
    os << '\n';
  }
  Json inputs = {{"k_range", a.k_range}, {"terms", a.terms}, {"restarts", a.restarts},
                 {"iters", a.iters}};
  ResultRecord rec{"verify-tables", inputs, Json{{"cells", cells}, {"pass", failing.empty()}},
                   utc_timestamp(), kToolVersion, a.seed};
  emit(common, rec, os.str());
  return failing.empty() ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  int k = 0;
  int n = 0;
  std::string out;
  std::string compare;
  int threads = 0;
};

int run_enumerate(const EnumerateArgs& a, const Common& common) {
  std::vector<Graph> graphs = enumerate_regular(a.k, a.n, EnumerateOptions{a.threads});
  Json inputs = {{"k", a.k}, {"n", a.n}, {"compare", a.compare}};

  if (!a.compare.empty()) {
    std::ifstream in(a.compare);
    if (!in) throw std::invalid_argument("cannot read " + a.compare);
    std::vector<Graph> external = read_graph6_stream(in);
    std::set<CanonicalForm> mine;
    for (const Graph& g : graphs) mine.insert(canonical_form(g));
    std::set<CanonicalForm> theirs;
    long rejected = 0;
    for (const Graph& g : external) {
      if (g.n() != a.n || is_regular(g) != a.k || !is_connected(g)) {
        ++rejected;
        continue;
      }
      theirs.insert(canonical_form(g));
    }
    long only_mine = 0;
    long only_theirs = 0;
    for (const auto& f : mine) only_mine += theirs.count(f) ? 0 : 1;
    for (const auto& f : theirs) only_theirs += mine.count(f) ? 0 : 1;
    long duplicates = static_cast<long>(external.size()) - rejected - static_cast<long>(theirs.size());
    bool same = only_mine == 0 && only_theirs == 0;
    Json result = {{"generated", graphs.size()},   {"external_lines", external.size()},
                   {"external_classes", theirs.size()}, {"external_rejected", rejected},
                   {"external_duplicates", duplicates}, {"only_generated", only_mine},
                   {"only_external", only_theirs},  {"match", same}};
    std::ostringstream os;
    os << "generated " << graphs.size() << " classes; external file has " << external.size()
       << " graphs, " << theirs.size() << " classes, " << rejected << " not connected "
       << a.k << "-regular on " << a.n << " vertices, " << duplicates << " duplicates\n";
    os << "only generated: " << only_mine << ", only external: " << only_theirs << '\n';
    os << (same ? "MATCH\n" : "MISMATCH\n");
    emit(common, ResultRecord{"enumerate", inputs, result, utc_timestamp(), kToolVersion, 0}, os.str());
    return same ? kExitOk : kExitFail;
  }

  std::ostringstream lines;
  for (const Graph& g : graphs) lines << to_graph6(g) << '\n';
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw std::runtime_error("cannot write " + a.out);
    out << lines.str();
  }
  Json result = {{"count", graphs.size()}};
  std::string human = a.out.empty() ? lines.str()
                                    : std::to_string(graphs.size()) + " graphs written to " + a.out + "\n";
  emit(common, ResultRecord{"enumerate", inputs, result, utc_timestamp(), kToolVersion, 0}, human);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex bounds and classification for regular graphs with small second eigenvalue"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "Print the result record as JSON");
  app.add_option("--cache", common.cache_flag, "Append records to this JSONL file (default $ABOUND_CACHE)");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Certified vertex bound v(k, z)");
  bound->add_option("--k", ba.k, "Degree")->required();
  bound->add_option("--z", ba.z, "Threshold on mu1")->required();
  bound->add_option("--method", ba.method, "linear | two-term | nterm | machine | best")
      ->check(CLI::IsMember({"linear", "two-term", "two_term", "nterm", "machine", "best"}));
  bound->add_option("--terms", ba.terms, "Number of V_j terms for nterm/best");
  bound->add_option("--s", ba.s, "Shift for the machine certificate");
  bound->add_option("--m", ba.m, "Order of the machine certificate");
  bound->add_option("--seed", ba.seed, "Optimizer seed");
  bound->add_option("--restarts", ba.restarts, "Optimizer restarts");
  bound->add_option("--iters", ba.iters, "Nelder-Mead iterations per restart");
  bound->add_option("--threads", ba.threads, "Worker threads (0: all cores)");
  bound->add_option("--dump-samples", ba.dump, "Write (x, f(x)) samples over [-L, L] to this file");

  ClassifyArgs ca;
  auto* cls = app.add_subcommand("classify", "All connected k-regular graphs with mu1 <= z");
  cls->add_option("--k", ca.k, "Degree")->required();
  cls->add_option("--z", ca.z, "Threshold on mu1")->required();
  cls->add_option("--n-max", ca.n_max, "Largest vertex count (default: certified bound)");
  cls->add_option("--budget", ca.budget, "Largest vertex count actually enumerated");
  cls->add_flag("--require-complete", ca.require_complete, "Fail unless the bound fits the budget");
  cls->add_option("--out", ca.out, "Write survivors as graph6 lines");
  cls->add_option("--seed", ca.seed, "Optimizer seed for the bound");
  cls->add_option("--threads", ca.threads, "Worker threads (0: all cores)");

  SpectrumArgs sa;
  auto* spec = app.add_subcommand("spectrum", "Adjacency spectrum, mu1 and trace-formula values");
  spec->add_option("--graph6", sa.graph6, "Graph as a graph6 string");
  spec->add_option("--atlas", sa.atlas, "Named graph, e.g. petersen, G9, K(6), circulant(8;1,4)");
  spec->add_option("--file", sa.file, "File of graph6 lines");
  spec->add_option("--mmax", sa.mmax, "Largest m for the trace formula");

  TablesArgs ta;
  auto* tables = app.add_subcommand("verify-tables", "Recompute the k = 4..10 bound tables");
  tables->add_option("--k-range", ta.k_range, "Degrees to check, LO..HI");
  tables->add_option("--seed", ta.seed, "Optimizer seed");
  tables->add_option("--terms", ta.terms, "Number of V_j terms");
  tables->add_option("--restarts", ta.restarts, "Optimizer restarts");
  tables->add_option("--iters", ta.iters, "Nelder-Mead iterations per restart");
  tables->add_option("--threads", ta.threads, "Worker threads (0: all cores)");

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "Connected k-regular graphs on n vertices, as graph6");
  en->add_option("--k", ea.k, "Degree")->required();
  en->add_option("--n", ea.n, "Vertex count")->required();
  en->add_option("--out", ea.out, "Write graph6 lines here instead of stdout");
  en->add_option("--compare", ea.compare, "Cross-check against an external graph6 file");
  en->add_option("--threads", ea.threads, "Worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*bound) return run_bound(ba, common);
    if (*cls) return run_classify(ca, common);
    if (*spec) return run_spectrum(sa, common);
    if (*tables) return run_tables(ta, common);
    if (*en) return run_enumerate(ea, common);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\nrequired vertex bound: " << e.required() << '\n';
    return kExitBudget;
  } catch (const Graph6Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const InfeasibleCertificate& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const NoFeasiblePoint& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const UnknownName& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitBadInput;
}
