#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "abound/atlas.hpp"
#include "abound/bound_core.hpp"
#include "abound/chebyshev.hpp"
#include "abound/enumerate.hpp"
#include "abound/errors.hpp"
#include "abound/graph6.hpp"
#include "abound/spectra.hpp"
#include "doctest.h"

using namespace abound;

namespace {

// Paley graph on GF(9) = GF(3)[i], i^2 = -1: x ~ y iff x - y is a nonzero square.
Graph paley9_from_field() {
  auto mul = [](int a, int b) {
    int ar = a % 3, ai = a / 3, br = b % 3, bi = b / 3;
    int re = ((ar * br - ai * bi) % 3 + 3) % 3;
    int im = (ar * bi + ai * br) % 3;
    return re + 3 * im;
  };
  auto sub = [](int a, int b) { return ((a % 3 - b % 3 + 3) % 3) + 3 * ((a / 3 - b / 3 + 3) % 3); };
  std::set<int> squares;
  for (int x = 1; x < 9; ++x) squares.insert(mul(x, x));
  Graph g(9);
  for (int x = 0; x < 9; ++x) {
    for (int y = x + 1; y < 9; ++y) {
      if (squares.count(sub(x, y))) g.add_edge(x, y);
    }
  }
  return g;
}

std::set<std::string> names_with_mu1(int k, double value) {
  std::set<std::string> out;
  for (const AtlasEntry& e : atlas_all(k)) {
    if (std::abs(mu1(e.graph) - value) < 1e-9) out.insert(e.name);
  }
  return out;
}

}  // namespace

TEST_CASE("atlas sizes") {
  CHECK(atlas_all(3).size() == 6);
  CHECK(atlas_all(4).size() == 7);
  CHECK(atlas_all().size() == 13);
  CHECK(atlas_all(5).empty());
}

TEST_CASE("every fixed entry is connected, regular and matches its spectrum") {
  for (const AtlasEntry& e : atlas_all()) {
    INFO(e.name);
    CHECK(is_connected(e.graph));
    CHECK(is_regular(e.graph) == e.degree);
    std::vector<double> values = adjacency_spectrum(e.graph).values;
    std::string why;
    CHECK_MESSAGE(spectrum_matches(e, values, 1e-7, &why), why);
    CHECK(std::abs(mu1(e.graph) - e.expected_mu1) < 1e-7);
    CHECK(mu1(e.graph) <= 1.0 + 1e-9);
    CHECK(std::abs(std::accumulate(values.begin(), values.end(), 0.0)) < 1e-7);
    CHECK(from_graph6(e.graph6()) == e.graph);
  }
}

TEST_CASE("named examples") {
  AtlasEntry g7 = atlas_graph("G7");
  CHECK(g7.graph.n() == 7);
  CHECK(is_regular(g7.graph) == 4);
  std::vector<double> v = adjacency_spectrum(g7.graph).values;
  const double want[] = {4, 1, 0, 0, -1, -1, -3};
  for (int i = 0; i < 7; ++i) CHECK(std::abs(v[i] - want[i]) < 1e-9);

  std::vector<double> p = adjacency_spectrum(atlas_graph("paley9").graph).values;
  CHECK(format_spectrum(p) == "4, 1x4, -2x4");

  CHECK(mu1(atlas_graph("K(6)").graph) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(atlas_graph("Kbip(4,4)").degree == 4);
  CHECK_THROWS_AS(atlas_graph("dodecahedron"), UnknownName);
  CHECK_THROWS_AS(atlas_graph("Kbip(2,3)"), UnknownName);
  CHECK_THROWS_AS(atlas_graph("circulant(8;0)"), UnknownName);
}

TEST_CASE("irrational spectra satisfy their minimal polynomials") {
  auto residual_count = [](const std::string& name, std::vector<double> poly) {
    MonoPoly p(std::move(poly));
    int count = 0;
    for (double v : adjacency_spectrum(atlas_graph(name).graph).values) {
      if (std::abs(p(v)) < 1e-7) ++count;
    }
    return count;
  };
  CHECK(residual_count("C7_12", {-1.0, -1.0, 2.0, 1.0}) == 6);
  CHECK(residual_count("G9", {-1.0, 0.0, 3.0, 1.0}) == 6);
  CHECK(residual_count("wagner", {-1.0, 2.0, 1.0}) == 4);
}

TEST_CASE("misprinted multisets fail the trace test; computed spectra pass") {
  // As printed: three copies of sqrt(2)-1 and one of -1-sqrt(2); a final +3 for the cube.
  const double r2 = std::sqrt(2.0);
  std::vector<double> wagner_listed = {3, 1, 1, -1 + r2, -1 + r2, -1, -1 - r2, -1 + r2};
  std::vector<double> cube_listed = {3, 1, 1, 1, -1, -1, -1, 3};
  CHECK(std::abs(std::accumulate(wagner_listed.begin(), wagner_listed.end(), 0.0)) > 1.0);
  CHECK(std::abs(std::accumulate(cube_listed.begin(), cube_listed.end(), 0.0)) > 1.0);

  std::vector<double> w = adjacency_spectrum(atlas_graph("wagner").graph).values;
  const double want_w[] = {3, 1, 1, r2 - 1, r2 - 1, -1, -1 - r2, -1 - r2};
  for (int i = 0; i < 8; ++i) CHECK(std::abs(w[i] - want_w[i]) < 1e-9);
  std::vector<double> c = adjacency_spectrum(atlas_graph("cube").graph).values;
  CHECK(c.back() == doctest::Approx(-3.0));
}

TEST_CASE("bipartite entries have symmetric spectra") {
  for (const char* name : {"K33", "cube", "K44"}) {
    std::vector<double> v = adjacency_spectrum(atlas_graph(name).graph).values;
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(std::abs(v[i] + v[v.size() - 1 - i]) < 1e-8);
  }
}

TEST_CASE("mu1 membership among cubic entries") {
  CHECK(names_with_mu1(3, 1.0) == std::set<std::string>{"Y2_prism", "cube", "wagner", "petersen"});
  CHECK(names_with_mu1(3, 0.0) == std::set<std::string>{"K33"});
  CHECK(names_with_mu1(3, -1.0) == std::set<std::string>{"K4"});
}

TEST_CASE("nine-vertex graphs are named by their spectra") {
  CHECK(canonical_form(atlas_graph("paley9").graph) == canonical_form(paley9_from_field()));
  CHECK(canonical_form(atlas_graph("G9").graph) != canonical_form(paley9_from_field()));
}

TEST_CASE("families") {
  CHECK(canonical_form(atlas_graph("wagner").graph) == canonical_form(circulant(8, {1, 4})));
  CHECK(canonical_form(atlas_graph("C7_12").graph) == canonical_form(circulant(7, {1, 2})));
  CHECK(canonical_form(atlas_graph("K33").graph) == canonical_form(complete_bipartite(3, 3)));
  for (int n = 3; n <= 9; ++n) {
    AtlasEntry e = atlas_graph("K(" + std::to_string(n) + ")");
    std::string why;
    CHECK_MESSAGE(spectrum_matches(e, adjacency_spectrum(e.graph).values, 1e-7, &why), why);
  }
  for (const char* name : {"circulant(8;1,4)", "circulant(10;1,3)", "circulant(12;2,3,6)", "Kbip(5,5)"}) {
    AtlasEntry e = atlas_graph(name);
    std::string why;
    CHECK_MESSAGE(spectrum_matches(e, adjacency_spectrum(e.graph).values, 1e-7, &why), why);
  }
}

TEST_CASE("certified bounds are never below a known witness") {
  for (const AtlasEntry& e : atlas_all()) {
    double z = mu1(e.graph) + 1e-9;
    for (double zz : {z, 1.0}) {
      if (zz + 1e-12 < mu1(e.graph)) continue;
      CHECK(machine_bound(e.degree, zz).vertex_bound_int >= e.graph.n());
      if (zz < (e.degree - 1.0) / e.degree) {
        CHECK(two_term_bound(e.degree, zz).vertex_bound_int >= e.graph.n());
      }
      if (zz < 0.0) CHECK(linear_bound(e.degree, zz).vertex_bound_int >= e.graph.n());
    }
  }
}
