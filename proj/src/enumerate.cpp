#include "abound/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>

#include "abound/atlas.hpp"
#include "abound/errors.hpp"
#include "abound/graph6.hpp"
#include "abound/spectra.hpp"

namespace abound {

namespace {

using Row = std::uint32_t;
using Rows = std::array<Row, kMaxCanonicalVertices>;

bool bit(Row r, int i) { return (r >> i) & 1u; }

Rows to_rows(const Graph& g) {
  Rows a{};
  for (auto [u, v] : g.edges()) {
    a[u] |= Row{1} << v;
    a[v] |= Row{1} << u;
  }
  return a;
}

// ------------------------------------------------------------ lex-least code
//
// Position p holds vertex order[p]; its column is the adjacency to
// order[0..p-1], read as an integer whose top bit is position 0.  Codes
// compare column by column, so at every position only the vertices with the
// least column can continue a minimal relabeling.

class MinSearch {
 public:
  MinSearch(const Rows& adj, int n) : adj_(adj), n_(n) {}

  std::vector<int> run() {
    std::array<Row, kMaxCanonicalVertices> sig{};
    dfs(0, 0, sig, false);
    return best_order_;
  }

 private:
  void dfs(int p, Row used, const std::array<Row, kMaxCanonicalVertices>& sig, bool below) {
    if (p == n_) {
      if (!have_best_ || below) {
        have_best_ = true;
        best_cols_ = cols_;
        best_order_.assign(order_.begin(), order_.begin() + n_);
        ++version_;
      }
      return;
    }
    Row least = ~Row{0};
    for (int v = 0; v < n_; ++v) {
      if (!bit(used, v)) least = std::min(least, sig[v]);
    }
    if (have_best_ && !below) {
      if (least > best_cols_[p]) return;
      if (least < best_cols_[p]) below = true;
    }
    for (int v = 0; v < n_; ++v) {
      if (bit(used, v) || sig[v] != least) continue;
      // A leaf below a sibling may have moved the best onto this prefix.
      if (have_best_ && !below && least > best_cols_[p]) return;
      std::array<Row, kMaxCanonicalVertices> next = sig;
      for (int w = 0; w < n_; ++w) next[w] = (sig[w] << 1) | (bit(adj_[v], w) ? 1u : 0u);
      cols_[p] = least;
      order_[p] = v;
      std::uint64_t before = version_;
      dfs(p + 1, used | (Row{1} << v), next, below);
      if (version_ != before) below = false;
    }
  }

  const Rows& adj_;
  int n_;
  std::array<Row, kMaxCanonicalVertices> cols_{};
  std::array<Row, kMaxCanonicalVertices> best_cols_{};
  std::array<int, kMaxCanonicalVertices> order_{};
  std::vector<int> best_order_;
  bool have_best_ = false;
  std::uint64_t version_ = 0;
};

// ------------------------------------------------------------ orderly generation
//
// Generation works with the lexicographically greatest code instead: its
// prefixes are dense, so degrees saturate early and the feasibility tests
// bite.  A prefix of a greatest code is the greatest code of the induced
// subgraph, so rejecting non-maximal prefixes loses nothing and emits each
// class once.

// True when no relabeling of the first m vertices has a larger code.
class MaxCheck {
 public:
  MaxCheck(const Rows& adj, int m) : adj_(adj), m_(m) {
    for (int p = 0; p < m; ++p) {
      Row c = 0;
      for (int u = 0; u < p; ++u) c = (c << 1) | (bit(adj[p], u) ? 1u : 0u);
      cols_[p] = c;
    }
  }

  bool run() {
    std::array<Row, kMaxCanonicalVertices> sig{};
    return dfs(0, 0, sig);
  }

 private:
  bool dfs(int p, Row used, const std::array<Row, kMaxCanonicalVertices>& sig) {
    if (p == m_) return true;
    for (int v = 0; v < m_; ++v) {
      if (!bit(used, v) && sig[v] > cols_[p]) return false;
    }
    for (int v = 0; v < m_; ++v) {
      if (bit(used, v) || sig[v] != cols_[p]) continue;
      std::array<Row, kMaxCanonicalVertices> next;
      for (int w = 0; w < m_; ++w) next[w] = (sig[w] << 1) | (bit(adj_[v], w) ? 1u : 0u);
      if (!dfs(p + 1, used | (Row{1} << v), next)) return false;
    }
    return true;
  }

  const Rows& adj_;
  int m_;
  std::array<Row, kMaxCanonicalVertices> cols_{};
};

struct Partial {
  Rows adj{};
  std::array<int, kMaxCanonicalVertices> deg{};
  int m = 0;  // vertices placed
};

class Generator {
 public:
  Generator(int k, int n) : k_(k), n_(n) {}

  // Collects canonical partial graphs with `level` vertices placed.
  void expand_to(const Partial& start, int level, std::vector<Partial>& out) const {
    walk(start, level, [&](const Partial& p) { out.push_back(p); });
  }

  void complete(const Partial& start, std::vector<Rows>& out) const {
    walk(start, n_, [&](const Partial& p) {
      if (connected(p.adj)) out.push_back(p.adj);
    });
  }

  Partial root() const {
    Partial p;
    p.m = 1;
    return p;
  }

 private:
  template <class Sink>
  void walk(const Partial& p, int level, Sink&& sink) const {
    if (p.m == level) {
      sink(p);
      return;
    }
    const int m = p.m;
    std::vector<int> open;
    for (int u = 0; u < m; ++u) {
      if (p.deg[u] < k_) open.push_back(u);
    }
    const int r_after = n_ - m - 1;  // vertices still to come after m
    // Vertex m needs at least one earlier neighbour (connectivity of a
    // greatest code), at most k, and must leave every deficit coverable.
    const int limit = std::min<int>(k_, static_cast<int>(open.size()));
    std::vector<int> pick;
    auto choose = [&](auto&& self, std::size_t from) -> void {
      if (!pick.empty()) try_column(p, pick, r_after, level, sink);
      if (static_cast<int>(pick.size()) == limit) return;
      for (std::size_t i = from; i < open.size(); ++i) {
        pick.push_back(open[i]);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    choose(choose, 0);
  }

  template <class Sink>
  void try_column(const Partial& p, const std::vector<int>& pick, int r_after, int level,
                  Sink&& sink) const {
    Partial q = p;
    const int m = p.m;
    for (int u : pick) {
      q.adj[u] |= Row{1} << m;
      q.adj[m] |= Row{1} << u;
      ++q.deg[u];
    }
    q.deg[m] = static_cast<int>(pick.size());
    q.m = m + 1;
    long deficit = 0;
    for (int u = 0; u <= m; ++u) {
      int d = k_ - q.deg[u];
      if (d > r_after) return;
      deficit += d;
    }
    const long r = r_after;
    const long need = static_cast<long>(k_) * r - deficit;  // twice the edges among the rest
    if (need < 0 || need % 2 != 0 || need > r * (r - 1)) return;
    if (!MaxCheck(q.adj, q.m).run()) return;
    walk(q, level, sink);
  }

  bool connected(const Rows& adj) const {
    Row seen = 1;
    Row frontier = 1;
    while (frontier) {
      Row next = 0;
      for (int v = 0; v < n_; ++v) {
        if (bit(frontier, v)) next |= adj[v];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return std::popcount(seen) == n_;
  }

  int k_;
  int n_;
};

Graph from_rows(const Rows& adj, int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (bit(adj[u], v)) g.add_edge(u, v);
    }
  }
  return g;
}

unsigned thread_count(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.n() > kMaxCanonicalVertices) {
    throw std::invalid_argument("canonical form limited to " +
                                std::to_string(kMaxCanonicalVertices) + " vertices");
  }
  CanonicalLabeling out;
  out.position.assign(g.n(), 0);
  if (g.n() == 0) {
    out.form.bytes = to_graph6(g);
    return out;
  }
  std::vector<int> order = MinSearch(to_rows(g), g.n()).run();
  for (int p = 0; p < g.n(); ++p) out.position[order[p]] = p;
  out.form.bytes = to_graph6(g.relabeled(out.position));
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g).position); }

std::vector<Graph> enumerate_regular(int k, int n, const EnumerateOptions& opts) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n <= k) throw std::invalid_argument("need n > k");
  if ((static_cast<long>(n) * k) % 2 != 0) {
    throw std::invalid_argument("n*k is odd: no " + std::to_string(k) + "-regular graph on " +
                                std::to_string(n) + " vertices");
  }
  if (n > kMaxCanonicalVertices) {
    throw std::invalid_argument("n exceeds " + std::to_string(kMaxCanonicalVertices));
  }

  Generator gen(k, n);
  // Split at a fixed depth; each canonical prefix is an independent task.
  const int split = std::min(n, k + 3);
  std::vector<Partial> tasks;
  gen.expand_to(gen.root(), split, tasks);

  std::vector<std::vector<Rows>> found(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) gen.complete(tasks[i], found[i]);
  };
  unsigned nthreads = std::min<unsigned>(thread_count(opts.threads),
                                         static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<std::pair<CanonicalForm, Graph>> keyed;
  for (const auto& bucket : found) {
    for (const Rows& adj : bucket) {
      Graph g = from_rows(adj, n);
      CanonicalLabeling lab = canonical_labeling(g);
      keyed.emplace_back(lab.form, g.relabeled(lab.position));
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    if (keyed[i].first == keyed[i - 1].first) {
      throw std::logic_error("enumerate_regular: duplicate isomorphism class");
    }
  }
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

BoundCertificate best_bound(int k, double z, const OptimizerConfig& cfg) {
  std::vector<TableEntry> rows = table_bounds(k, {z}, cfg);
  if (!rows[0].best) {
    std::string msg = "no certificate for k = " + std::to_string(k) + ", z = " + std::to_string(z);
    for (const auto& e : rows[0].errors) msg += "; " + e;
    throw NoFeasiblePoint(msg);
  }
  return *rows[0].best;
}

ClassificationReport classify(int k, double z, std::optional<int> n_max,
                              const ClassifyOptions& opts) {
  if (k < 3) throw std::invalid_argument("k must be >= 3");
  if (!(z < 2.0 * std::sqrt(k - 1.0))) throw std::invalid_argument("z must be < 2 sqrt(k-1)");
  if (n_max && *n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (opts.budget < 1) throw std::invalid_argument("budget must be >= 1");

  ClassificationReport rep;
  rep.k = k;
  rep.z = z;
  BoundCertificate cert = best_bound(k, z, opts.optimizer);
  rep.bound = cert.vertex_bound_int;
  rep.bound_method = std::string(to_string(cert.method));

  long target = n_max ? std::min<long>(*n_max, *rep.bound) : *rep.bound;
  if (target > kMaxCanonicalVertices) {
    throw BudgetExceeded("complete classification needs graphs on up to " +
                             std::to_string(*rep.bound) + " vertices; enumeration stops at " +
                             std::to_string(kMaxCanonicalVertices),
                         *rep.bound);
  }
  if (opts.require_complete && *rep.bound > opts.budget) {
    throw BudgetExceeded("complete classification needs graphs on up to " +
                             std::to_string(*rep.bound) + " vertices; budget is " +
                             std::to_string(opts.budget),
                         *rep.bound);
  }
  rep.n_max = static_cast<int>(std::min<long>(target, opts.budget));
  rep.complete = *rep.bound <= rep.n_max;

  std::vector<std::pair<CanonicalForm, std::string>> known;
  for (const AtlasEntry& e : atlas_all(k)) known.emplace_back(canonical_form(e.graph), e.name);

  EnumerateOptions eopts{opts.threads};
  for (int n = k + 1; n <= rep.n_max; ++n) {
    if ((static_cast<long>(n) * k) % 2 != 0) continue;
    std::vector<Graph> graphs = enumerate_regular(k, n, eopts);
    rep.graphs_per_n[n] = static_cast<long>(graphs.size());
    long kept = 0;
    for (const Graph& g : graphs) {
      double m1 = mu1(g);
      if (!(m1 <= z + 1e-9)) continue;
      Survivor s;
      s.graph6 = to_graph6(g);
      s.n = n;
      s.mu1 = m1;
      s.borderline = std::abs(m1 - z) < 1e-7;
      CanonicalForm cf = canonical_form(g);
      for (const auto& [form, name] : known) {
        if (form == cf) s.atlas_name = name;
      }
      rep.survivors.push_back(std::move(s));
      rep.realized_max_n = n;
      ++kept;
    }
    rep.survivors_per_n[n] = kept;
  }
  return rep;
}

}  // namespace abound
