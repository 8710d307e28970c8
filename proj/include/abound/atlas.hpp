#pragma once

// Named regular graphs with small mu_1, plus the complete, complete
// bipartite and circulant families.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abound/graph.hpp"
#include "abound/spectra.hpp"

namespace abound {

// Every root of a monic polynomial, each with the same multiplicity.
// Rational eigenvalues use a linear polynomial.
struct EigenGroup {
  std::vector<double> minpoly;  // ascending coefficients, leading 1
  int multiplicity = 1;
  std::string label;

  static EigenGroup value(double v, int multiplicity, std::string label = {});
  std::vector<double> roots() const;
  double residual(double lambda) const;
};

struct AtlasEntry {
  std::string name;
  std::string description;
  int degree = 0;
  Graph graph;
  double expected_mu1 = 0.0;
  std::string expected_mu1_label;
  std::vector<EigenGroup> expected_spectrum;
  // "cubic", "quartic" or "family".
  std::string group;

  std::string graph6() const;
};

/// Fixed names: K4, K33, Y2_prism, cube, wagner, petersen, K5, octahedron,
/// C7_12, G7, K44, G9, paley9.  Families: K(n), Kbip(n,n), circulant(n;s1,s2,...).
/// Throws UnknownName.
AtlasEntry atlas_graph(std::string_view name);

/// The thirteen fixed entries, optionally only those of degree k.
std::vector<AtlasEntry> atlas_all(std::optional<int> k = std::nullopt);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
/// Vertex i adjacent to i +- s mod n for every s in steps.
Graph circulant(int n, const std::vector<int>& steps);

/// Counts, for every expected group, the computed eigenvalues whose residual
/// is below tol, and requires the counts to account for the whole spectrum.
/// On failure *why explains the first mismatch.
bool spectrum_matches(const AtlasEntry& e, const std::vector<double>& values, double tol,
                      std::string* why = nullptr);

}  // namespace abound
