#pragma once

// Isomorphism classes of connected k-regular graphs, and the classification
// pipeline built on them.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abound/graph.hpp"
#include "abound/optimizer.hpp"

namespace abound {

constexpr int kMaxCanonicalVertices = 32;

// The upper triangle of the lexicographically least relabeling, read column
// by column.  Stored graph6-encoded, which preserves the bit order.
struct CanonicalForm {
  std::string bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> position;  // position[v] = new label of vertex v
};

/// Requires n <= kMaxCanonicalVertices.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
/// The graph relabeled into canonical order.
Graph canonical_graph(const Graph& g);

struct EnumerateOptions {
  int threads = 0;  // 0: hardware concurrency
};

/// One graph per isomorphism class of connected k-regular graphs on n
/// vertices, each in canonical labeling, ascending by canonical form.
/// Throws std::invalid_argument when n*k is odd, n <= k, k < 1 or n exceeds
/// kMaxCanonicalVertices.
std::vector<Graph> enumerate_regular(int k, int n, const EnumerateOptions& opts = {});

struct Survivor {
  std::string graph6;
  int n = 0;
  double mu1 = 0.0;
  std::optional<std::string> atlas_name;
  bool borderline = false;  // |mu1 - z| < 1e-7
};

struct ClassificationReport {
  int k = 0;
  double z = 0.0;
  int n_max = 0;                 // largest n enumerated
  std::optional<long> bound;     // certified vertex bound, when one exists
  std::string bound_method;
  bool complete = false;         // n_max reaches the bound
  std::map<int, long> graphs_per_n;
  std::map<int, long> survivors_per_n;
  std::vector<Survivor> survivors;
  int realized_max_n = 0;        // largest survivor
};

struct ClassifyOptions {
  // Largest n enumerated when no explicit n_max is given or it is larger.
  int budget = 10;
  // Throw BudgetExceeded instead of returning a partial report.
  bool require_complete = false;
  int threads = 0;
  OptimizerConfig optimizer{.terms = 5, .restarts = 16};
};

/// Every connected k-regular graph with mu_1 <= z + 1e-9 on at most
/// min(n_max or bound, budget) vertices.  Throws BudgetExceeded when the
/// bound exceeds kMaxCanonicalVertices, or exceeds the budget while
/// require_complete is set.
ClassificationReport classify(int k, double z, std::optional<int> n_max,
                              const ClassifyOptions& opts = {});

/// Best certified vertex bound over the closed-form and optimized methods.
BoundCertificate best_bound(int k, double z, const OptimizerConfig& cfg);

}  // namespace abound
