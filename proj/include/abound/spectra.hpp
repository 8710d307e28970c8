#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abound/graph.hpp"

namespace abound {

struct Spectrum {
  std::vector<double> values;  // descending
  double tol = 1e-9;
};

/// Dense symmetric matrix, row-major.
struct SymMatrix {
  int n = 0;
  std::vector<double> a;
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

struct EigenDecomposition {
  std::vector<double> values;  // descending
  SymMatrix vectors;           // column j pairs with values[j]
  int sweeps = 0;
  double off_norm = 0.0;  // off-diagonal Frobenius norm at exit
};

/// Cyclic Jacobi rotations until the off-diagonal norm drops below tol.
EigenDecomposition jacobi_eigen(SymMatrix m, double tol = 1e-11, int max_sweeps = 100);

SymMatrix adjacency_matrix(const Graph& g);

Spectrum adjacency_spectrum(const Graph& g);

/// Second largest adjacency eigenvalue.  Throws DisconnectedGraph.
double mu1(const Graph& g);

bool is_connected(const Graph& g);

/// The common degree, or nullopt when degrees differ.  The empty graph has none.
std::optional<int> is_regular(const Graph& g);

/// S_m = (k-1)^{m/2} sum_j V_m(mu_j / sqrt(k-1)) for m = 0..m_max, computed
/// exactly as trace(P_m) with P_{m+1} = A P_m - (k-1) P_{m-1}, P_0 = I,
/// P_1 = A.  Throws NotRegular.
std::vector<double> trace_formula_check(const Graph& g, int m_max);

/// (1/n) sum_j V_m(mu_j / sqrt(k-1)) for m = 0..m_max, from the eigenvalues.
/// Throws NotRegular.
std::vector<double> spectral_measure_moments(const Graph& g, int m_max);

/// Groups a descending list into (value, multiplicity) wherever consecutive
/// values differ by less than gap.  The reported value is the group mean.
std::vector<std::pair<double, int>> group_multiplicities(const std::vector<double>& values,
                                                         double gap = 1e-6);

/// "3, 1x5, -2x4" style rendering of the grouped spectrum.
std::string format_spectrum(const std::vector<double>& values, int precision = 6);

}  // namespace abound
