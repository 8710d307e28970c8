#pragma once
// Independent reference checks shared by the unit tests and the acceptance run.
// Nothing here uses the canonical-form code.

#include <algorithm>
#include <vector>

#include "abound/graph.hpp"
#include "abound/spectra.hpp"

namespace abound::oracle {

// Backtracking isomorphism test, independent of the canonical-form code.
inline bool isomorphic(const Graph& a, const Graph& b) {
  const int n = a.n();
  if (n != b.n() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::vector<int> sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(n, -1);
  std::vector<char> taken(n, 0);
  auto extend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (taken[w] || db[w] != da[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(map[u], w);
      if (!ok) continue;
      map[v] = w;
      taken[w] = 1;
      if (self(self, v + 1)) return true;
      taken[w] = 0;
    }
    return false;
  };
  return extend(extend, 0);
}

// Every labeled connected k-regular graph on n vertices, by edge-by-edge
// backtracking over pairs in lexicographic order.
inline std::vector<Graph> labeled_regular(int k, int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<Graph> out;
  std::vector<int> deg(n, 0);
  Graph g(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == pairs.size()) {
      if (std::all_of(deg.begin(), deg.end(), [&](int d) { return d == k; }) && is_connected(g)) {
        out.push_back(g);
      }
      return;
    }
    auto [u, v] = pairs[i];
    // Once all pairs involving u are decided its degree is final.
    bool u_closes = (i + 1 == pairs.size()) || pairs[i + 1].first != u;
    if (deg[u] < k && deg[v] < k) {
      g.add_edge(u, v);
      ++deg[u];
      ++deg[v];
      if (!u_closes || deg[u] == k) self(self, i + 1);
      g.remove_edge(u, v);
      --deg[u];
      --deg[v];
    }
    if (!u_closes || deg[u] == k) self(self, i + 1);
  };
  rec(rec, 0);
  return out;
}

inline std::vector<Graph> dedup(const std::vector<Graph>& graphs) {
  std::vector<Graph> reps;
  for (const Graph& g : graphs) {
    bool seen = std::any_of(reps.begin(), reps.end(), [&](const Graph& r) { return isomorphic(g, r); });
    if (!seen) reps.push_back(g);
  }
  return reps;
}

}  // namespace abound::oracle
