#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "abound/atlas.hpp"
#include "abound/chebyshev.hpp"
#include "abound/errors.hpp"
#include "abound/graph6.hpp"
#include "abound/spectra.hpp"
#include "doctest.h"

using namespace abound;

namespace {

// Reference eigenvalues from a library solver, descending.
std::vector<double> reference_eigs(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + g.n());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Graph random_regularish(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

void check_values(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < tol);
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g(5);
  g.add_edge(0, 4);
  CHECK(g.adjacent(4, 0));
  CHECK(g.degree(0) == 1);
  CHECK(g.edge_count() == 1);
  g.remove_edge(4, 0);
  CHECK(g.edge_count() == 0);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
  Graph big(130);
  big.add_edge(3, 129);
  CHECK(big.adjacent(129, 3));
  CHECK(big.neighbors(129) == std::vector<int>{3});

  Graph p = path3();
  Graph q = p.relabeled({2, 0, 1});
  CHECK(q.adjacent(2, 0));
  CHECK(q.adjacent(0, 1));
  CHECK_FALSE(q.adjacent(2, 1));
  CHECK_THROWS_AS(p.relabeled({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("adjacency spectrum examples") {
  check_values(adjacency_spectrum(complete_graph(4)).values, {3, -1, -1, -1}, 1e-9);
  check_values(adjacency_spectrum(complete_bipartite(3, 3)).values, {3, 0, 0, 0, 0, -3}, 1e-9);
  check_values(adjacency_spectrum(atlas_graph("petersen").graph).values,
               {3, 1, 1, 1, 1, 1, -2, -2, -2, -2}, 1e-9);
  CHECK(adjacency_spectrum(complete_graph(3)).tol == 1e-9);
  Spectrum empty = adjacency_spectrum(Graph(0));
  CHECK(empty.values.empty());
}

TEST_CASE("jacobi agrees with a library solver and reconstructs A") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 25;
    Graph g = random_regularish(n, 0.4, rng);
    EigenDecomposition d = jacobi_eigen(adjacency_matrix(g));
    CHECK(d.off_norm < 1e-11);
    check_values(d.values, reference_eigs(g), 1e-9);

    SymMatrix a = adjacency_matrix(g);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double r = 0.0;
        for (int l = 0; l < n; ++l) r += d.vectors(i, l) * d.values[l] * d.vectors(j, l);
        worst = std::max(worst, std::abs(r - a(i, j)));
      }
    }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("trace and second-moment identities") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_regularish(6 + trial, 0.3, rng);
    std::vector<double> v = adjacency_spectrum(g).values;
    double sum = std::accumulate(v.begin(), v.end(), 0.0);
    double sq = 0.0;
    for (double x : v) sq += x * x;
    CHECK(std::abs(sum) < 1e-7);
    CHECK(std::abs(sq - 2.0 * g.edge_count()) < 1e-7);
  }
}

TEST_CASE("mu1 on families") {
  CHECK(mu1(atlas_graph("Y2_prism").graph) == doctest::Approx(1.0).epsilon(1e-12));
  for (int n = 2; n <= 6; ++n) CHECK(std::abs(mu1(complete_bipartite(n, n))) < 1e-9);
  for (int n = 3; n <= 7; ++n) CHECK(mu1(complete_graph(n)) == doctest::Approx(-1.0).epsilon(1e-12));
  Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_THROWS_AS(mu1(two_triangles), DisconnectedGraph);
}

TEST_CASE("connectivity and regularity") {
  CHECK(is_connected(complete_graph(4)));
  CHECK(is_regular(complete_graph(4)) == 3);
  Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(is_connected(two_triangles));
  CHECK(is_regular(two_triangles) == 2);
  CHECK_FALSE(is_regular(path3()).has_value());
  CHECK(is_connected(path3()));
}

TEST_CASE("trace formula values") {
  std::vector<double> k4 = trace_formula_check(complete_graph(4), 3);
  REQUIRE(k4.size() == 4);
  CHECK(k4[0] == 4.0);
  CHECK(k4[1] == 0.0);
  // S_2 = tr(A^2) - (k-1) n = 12 - 8; S_3 = tr(A^3) - 2(k-1) tr(A) = 24.
  CHECK(k4[2] == 4.0);
  CHECK(k4[3] == 24.0);

  Graph pet = atlas_graph("petersen").graph;
  std::vector<double> s = trace_formula_check(pet, 20);
  for (double v : s) CHECK(v >= -1e-7 * 10);
  // Triangle-free, so S_3 = tr(A^3) - 2(k-1) tr(A) = 0.
  CHECK(s[3] == 0.0);
  // S_4 = tr(A^4) - 3(k-1) tr(A^2) + (k-1)^2 n = 150 - 180 + 40.
  CHECK(s[4] == 10.0);
  CHECK_THROWS_AS(trace_formula_check(path3(), 4), NotRegular);
}

TEST_CASE("trace formula matches the eigenvalue sum") {
  for (const AtlasEntry& e : atlas_all()) {
    const int k = e.degree;
    std::vector<double> exact = trace_formula_check(e.graph, 20);
    std::vector<double> eig = adjacency_spectrum(e.graph).values;
    const double root = std::sqrt(k - 1.0);
    for (int m = 0; m <= 20; ++m) {
      double direct = 0.0;
      for (double mu : eig) direct += v_eval(m, mu / root);
      direct *= std::pow(root, m);
      double scale = std::pow(static_cast<double>(k), m) * e.graph.n();
      CHECK(std::abs(exact[m] - direct) <= 1e-12 * scale + 1e-9);
      CHECK(std::round(exact[m]) == exact[m]);
    }
  }
}

TEST_CASE("spectral measure moments") {
  CHECK(spectral_measure_moments(complete_graph(5), 0)[0] == doctest::Approx(1.0));
  std::vector<double> k33 = spectral_measure_moments(complete_bipartite(3, 3), 1);
  CHECK(std::abs(k33[1]) < 1e-12);
  for (const AtlasEntry& e : atlas_all()) {
    const int k = e.degree;
    std::vector<double> mom = spectral_measure_moments(e.graph, 20);
    std::vector<double> s = trace_formula_check(e.graph, 20);
    for (int m = 0; m <= 20; ++m) {
      double via_trace = s[m] / (e.graph.n() * std::pow(k - 1.0, m / 2.0));
      CHECK(std::abs(mom[m] - via_trace) < 1e-8 * std::max(1.0, std::abs(via_trace)));
    }
  }
  CHECK_THROWS_AS(spectral_measure_moments(path3(), 2), NotRegular);
}

TEST_CASE("multiplicity grouping and formatting") {
  std::vector<double> pet = adjacency_spectrum(atlas_graph("petersen").graph).values;
  auto groups = group_multiplicities(pet);
  REQUIRE(groups.size() == 3);
  CHECK(groups[1].second == 5);
  CHECK(groups[2].second == 4);
  CHECK(format_spectrum(pet) == "3, 1x5, -2x4");
  CHECK(format_spectrum(adjacency_spectrum(complete_bipartite(2, 2)).values) == "2, 0x2, -2");
}

TEST_CASE("graph6 fixtures") {
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(atlas_graph("petersen").graph) == "IheA@GUAo");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph(2)) == "A?");
  std::vector<std::pair<int, int>> cyc;
  for (int i = 0; i < 70; ++i) cyc.emplace_back(i, (i + 1) % 70);
  std::string long_form = to_graph6(Graph::from_edges(70, cyc));
  CHECK(long_form.size() == 407);
  CHECK(long_form.starts_with("~?@EhCGGC@?G"));
  CHECK(from_graph6(long_form) == Graph::from_edges(70, cyc));

  CHECK(from_graph6("C~") == complete_graph(4));
  CHECK(from_graph6(">>graph6<<C~") == complete_graph(4));
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(31);
  for (int n = 0; n <= 40; ++n) {
    Graph g = random_regularish(n, 0.5, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 errors carry byte offsets") {
  auto offset_of = [](const std::string& s) -> long {
    try {
      from_graph6(s);
    } catch (const Graph6Error& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("C") == 1);       // truncated
  CHECK(offset_of("C~~") == 2);     // trailing byte
  CHECK(offset_of("C\x20") == 1);   // below 63
  CHECK(offset_of(">>graph6<<") == 10);
  CHECK(offset_of("~?") == 2);
  std::istringstream in("C~\n\nA_\nC!\n");
  try {
    read_graph6_stream(in);
    FAIL("expected an error");
  } catch (const Graph6Error& e) {
    CHECK(e.offset() == 1);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  std::istringstream ok("C~\r\nA_\n");
  CHECK(read_graph6_stream(ok).size() == 2);
}
