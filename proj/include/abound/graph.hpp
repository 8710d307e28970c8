#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace abound {

// Simple undirected graph on vertices 0..n-1, adjacency kept as bitset rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws std::invalid_argument on loops or out-of-range endpoints;
  /// repeated edges collapse.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const noexcept { return n_; }
  bool adjacent(int u, int v) const noexcept {
    return (bits_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1u;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const noexcept;
  std::size_t edge_count() const noexcept;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> neighbors(int v) const;

  /// The graph with vertex v renamed to perm[v].
  Graph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t row_offset(int v) const noexcept { return static_cast<std::size_t>(v) * words_; }
  void check_vertex(int v) const;

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace abound
