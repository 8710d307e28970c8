#include "abound/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace abound {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n = " +
                                std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  bits_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  bits_[row_offset(u) + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[row_offset(v) + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(int v) const noexcept {
  int d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[row_offset(v) + w]);
  return d;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t total = 0;
  for (int v = 0; v < n_; ++v) total += static_cast<std::size_t>(degree(v));
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 0; w < n_; ++w) {
    if (adjacent(v, w)) out.push_back(w);
  }
  return out;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("relabeled: permutation has wrong size");
  }
  std::vector<char> seen(n_, 0);
  for (int p : perm) {
    check_vertex(p);
    if (seen[p]++) throw std::invalid_argument("relabeled: not a permutation");
  }
  Graph g(n_);
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

}  // namespace abound
