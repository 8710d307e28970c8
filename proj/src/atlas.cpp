#include "abound/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "abound/chebyshev.hpp"
#include "abound/errors.hpp"
#include "abound/graph6.hpp"

namespace abound {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Edge lists use the 1-based labels of the drawings.
Graph from_one_based(int n, const EdgeList& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
  return g;
}

EigenGroup poly_group(std::vector<double> minpoly, int multiplicity, std::string label) {
  EigenGroup g;
  g.minpoly = std::move(minpoly);
  g.multiplicity = multiplicity;
  g.label = std::move(label);
  return g;
}

AtlasEntry make(std::string name, std::string description, int degree, Graph graph,
                std::vector<EigenGroup> spectrum, std::string group) {
  AtlasEntry e;
  e.name = std::move(name);
  e.description = std::move(description);
  e.degree = degree;
  e.graph = std::move(graph);
  e.expected_spectrum = std::move(spectrum);
  e.group = std::move(group);
  // mu_1 is the second entry of the expected multiset.
  std::vector<std::pair<double, const EigenGroup*>> all;
  for (const auto& g : e.expected_spectrum) {
    for (double r : g.roots()) {
      for (int i = 0; i < g.multiplicity; ++i) all.emplace_back(r, &g);
    }
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  double best = all.size() > 1 ? all[1].first : -HUGE_VAL;
  std::string label = all.size() > 1 ? all[1].second->label : "";
  e.expected_mu1 = best;
  e.expected_mu1_label = label;
  return e;
}

AtlasEntry k4() {
  return make("K4", "complete graph on 4 vertices", 3,
              from_one_based(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
              {EigenGroup::value(3, 1), EigenGroup::value(-1, 3)}, "cubic");
}

AtlasEntry k33() {
  return make("K33", "complete bipartite graph K_{3,3}", 3,
              from_one_based(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}}),
              {EigenGroup::value(3, 1), EigenGroup::value(0, 4), EigenGroup::value(-3, 1)}, "cubic");
}

AtlasEntry y2() {
  return make("Y2_prism", "triangular prism", 3,
              from_one_based(6, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}}),
              {EigenGroup::value(3, 1), EigenGroup::value(1, 1), EigenGroup::value(0, 2),
               EigenGroup::value(-2, 2)},
              "cubic");
}

AtlasEntry cube() {
  // Bipartite, so the last eigenvalue is -3.
  return make("cube", "3-dimensional cube", 3,
              from_one_based(8, {{1, 2}, {1, 3}, {1, 5}, {2, 4}, {2, 6}, {3, 4}, {3, 7}, {4, 8},
                                 {5, 6}, {5, 7}, {6, 8}, {7, 8}}),
              {EigenGroup::value(3, 1), EigenGroup::value(1, 3), EigenGroup::value(-1, 3),
               EigenGroup::value(-3, 1)},
              "cubic");
}

AtlasEntry wagner() {
  // -1 +- sqrt(2) are the roots of l^2 + 2l - 1, each twice.
  return make("wagner", "Wagner graph (Moebius ladder on 8 vertices)", 3,
              from_one_based(8, {{1, 2}, {1, 8}, {1, 5}, {2, 3}, {2, 6}, {3, 4}, {3, 7}, {4, 5},
                                 {4, 8}, {5, 6}, {6, 7}, {7, 8}}),
              {EigenGroup::value(3, 1), EigenGroup::value(1, 2), EigenGroup::value(-1, 1),
               poly_group({-1.0, 2.0, 1.0}, 2, "-1 +- sqrt(2)")},
              "cubic");
}

AtlasEntry petersen() {
  return make("petersen", "Petersen graph", 3,
              from_one_based(10, {{1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 5},
                                  {4, 9}, {5, 10}, {6, 8}, {6, 9}, {7, 9}, {7, 10}, {8, 10}}),
              {EigenGroup::value(3, 1), EigenGroup::value(1, 5), EigenGroup::value(-2, 4)}, "cubic");
}

AtlasEntry k5() {
  return make("K5", "complete graph on 5 vertices", 4,
              from_one_based(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4},
                                 {3, 5}, {4, 5}}),
              {EigenGroup::value(4, 1), EigenGroup::value(-1, 4)}, "quartic");
}

AtlasEntry octahedron() {
  return make("octahedron", "octahedral graph K_{2,2,2}", 4,
              from_one_based(6, {{1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 6}, {3, 4},
                                 {3, 5}, {4, 5}, {4, 6}, {5, 6}}),
              {EigenGroup::value(4, 1), EigenGroup::value(0, 3), EigenGroup::value(-2, 2)},
              "quartic");
}

AtlasEntry c7_12() {
  return make("C7_12", "circulant C(7; 1, 2)", 4,
              from_one_based(7, {{1, 2}, {1, 3}, {1, 6}, {1, 7}, {2, 3}, {2, 4}, {2, 7}, {3, 4},
                                 {3, 5}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}}),
              {EigenGroup::value(4, 1), poly_group({-1.0, -1.0, 2.0, 1.0}, 2, "roots of l^3 + 2l^2 - l - 1")},
              "quartic");
}

AtlasEntry g7() {
  return make("G7", "unnamed 4-regular graph on 7 vertices", 4,
              from_one_based(7, {{1, 2}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 4}, {2, 6}, {3, 4},
                                 {3, 5}, {3, 7}, {4, 7}, {4, 5}, {5, 6}, {6, 7}}),
              {EigenGroup::value(4, 1), EigenGroup::value(1, 1), EigenGroup::value(0, 2),
               EigenGroup::value(-1, 2), EigenGroup::value(-3, 1)},
              "quartic");
}

AtlasEntry k44() {
  EdgeList e;
  for (int u = 1; u <= 4; ++u) {
    for (int v = 5; v <= 8; ++v) e.emplace_back(u, v);
  }
  return make("K44", "complete bipartite graph K_{4,4}", 4, from_one_based(8, e),
              {EigenGroup::value(4, 1), EigenGroup::value(0, 6), EigenGroup::value(-4, 1)}, "quartic");
}

// The two 9-vertex drawings carry each other's captions: the list captioned
// as the unnamed graph is the 3x3 rook's graph, which is the Paley graph.
// Names follow the spectra.
const EdgeList kNineA = {{1, 2}, {1, 6}, {1, 7}, {1, 9}, {2, 3}, {2, 8}, {2, 9}, {3, 4}, {3, 7},
                         {3, 8}, {4, 5}, {4, 7}, {4, 9}, {5, 6}, {5, 8}, {5, 9}, {6, 7}, {6, 8}};
const EdgeList kNineB = {{1, 2}, {1, 7}, {1, 8}, {1, 9}, {2, 3}, {2, 4}, {2, 6}, {3, 4}, {3, 8},
                         {3, 9}, {4, 5}, {4, 7}, {5, 6}, {5, 8}, {5, 9}, {6, 7}, {6, 9}, {7, 8}};

AtlasEntry g9() {
  return make("G9", "unnamed 4-regular graph on 9 vertices", 4, from_one_based(9, kNineB),
              {EigenGroup::value(4, 1), EigenGroup::value(1, 2),
               poly_group({-1.0, 0.0, 3.0, 1.0}, 2, "roots of l^3 + 3l^2 - 1")},
              "quartic");
}

AtlasEntry paley9() {
  return make("paley9", "Paley graph on 9 vertices", 4, from_one_based(9, kNineA),
              {EigenGroup::value(4, 1), EigenGroup::value(1, 4), EigenGroup::value(-2, 4)}, "quartic");
}

using Maker = AtlasEntry (*)();
const std::vector<Maker>& fixed_makers() {
  static const std::vector<Maker> makers = {k4, k33, y2, cube, wagner, petersen,
                                            k5, octahedron, c7_12, g7, k44, g9, paley9};
  return makers;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) throw std::invalid_argument("empty number");
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad number");
    out.push_back(v);
  }
  return out;
}

std::vector<EigenGroup> grouped_values(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<EigenGroup> out;
  for (auto [v, mult] : group_multiplicities(values, 1e-9)) out.push_back(EigenGroup::value(v, mult));
  return out;
}

std::optional<AtlasEntry> family(const std::string& name) {
  static const std::regex kn(R"(\s*K\s*\(\s*(\d+)\s*\)\s*)");
  static const std::regex kbip(R"(\s*Kbip\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  static const std::regex circ(R"(\s*circulant\s*\(\s*(\d+)\s*;\s*([\d,\s]+)\)\s*)");
  std::smatch m;
  if (std::regex_match(name, m, kn)) {
    int n = std::stoi(m[1]);
    if (n < 2) return std::nullopt;
    return make("K(" + std::to_string(n) + ")", "complete graph", n - 1, complete_graph(n),
                {EigenGroup::value(n - 1, 1), EigenGroup::value(-1, n - 1)}, "family");
  }
  if (std::regex_match(name, m, kbip)) {
    int a = std::stoi(m[1]);
    int b = std::stoi(m[2]);
    if (a != b || a < 1) return std::nullopt;
    std::vector<EigenGroup> spec{EigenGroup::value(a, 1)};
    if (a > 1) spec.push_back(EigenGroup::value(0, 2 * a - 2));
    spec.push_back(EigenGroup::value(-a, 1));
    return make("Kbip(" + std::to_string(a) + "," + std::to_string(a) + ")",
                "complete bipartite graph", a, complete_bipartite(a, a), spec, "family");
  }
  if (std::regex_match(name, m, circ)) {
    int n = std::stoi(m[1]);
    std::vector<int> steps = parse_ints(m[2]);
    Graph g = circulant(n, steps);
    auto k = is_regular(g);
    if (!k) return std::nullopt;
    std::vector<double> values;
    std::vector<int> uniq;
    for (int s : steps) {
      int r = ((s % n) + n) % n;
      r = std::min(r, n - r);
      if (r != 0 && std::find(uniq.begin(), uniq.end(), r) == uniq.end()) uniq.push_back(r);
    }
    for (int j = 0; j < n; ++j) {
      double v = 0.0;
      for (int s : uniq) {
        double c = std::cos(2.0 * std::numbers::pi * j * s / n);
        v += (2 * s == n) ? c : 2.0 * c;
      }
      values.push_back(v);
    }
    std::string canon = "circulant(" + std::to_string(n) + ";";
    for (std::size_t i = 0; i < steps.size(); ++i) canon += (i ? "," : "") + std::to_string(steps[i]);
    canon += ")";
    return make(canon, "circulant graph", *k, std::move(g), grouped_values(values), "family");
  }
  return std::nullopt;
}

}  // namespace

EigenGroup EigenGroup::value(double v, int multiplicity, std::string label) {
  if (label.empty()) {
    std::ostringstream os;
    os << v;
    label = os.str();
  }
  return poly_group({-v, 1.0}, multiplicity, std::move(label));
}

std::vector<double> EigenGroup::roots() const {
  if (minpoly.size() == 2) return {-minpoly[0] / minpoly[1]};
  return real_roots(MonoPoly(minpoly), -64.0, 64.0);
}

double EigenGroup::residual(double lambda) const { return std::abs(MonoPoly(minpoly)(lambda)); }

std::string AtlasEntry::graph6() const { return to_graph6(graph); }

AtlasEntry atlas_graph(std::string_view name) {
  for (Maker mk : fixed_makers()) {
    AtlasEntry e = mk();
    if (e.name == name) return e;
  }
  try {
    if (auto e = family(std::string(name))) return *e;
  } catch (const std::exception& ex) {
    throw UnknownName("unknown atlas name '" + std::string(name) + "': " + ex.what());
  }
  throw UnknownName("unknown atlas name '" + std::string(name) + "'");
}

std::vector<AtlasEntry> atlas_all(std::optional<int> k) {
  std::vector<AtlasEntry> out;
  for (Maker mk : fixed_makers()) {
    AtlasEntry e = mk();
    if (!k || e.degree == *k) out.push_back(std::move(e));
  }
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

Graph circulant(int n, const std::vector<int>& steps) {
  if (n < 1) throw std::invalid_argument("circulant: n must be >= 1");
  Graph g(n);
  for (int s : steps) {
    int r = ((s % n) + n) % n;
    if (r == 0) throw std::invalid_argument("circulant: step is 0 mod n");
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + r) % n);
  }
  return g;
}

bool spectrum_matches(const AtlasEntry& e, const std::vector<double>& values, double tol,
                      std::string* why) {
  std::size_t expected_total = 0;
  for (const auto& grp : e.expected_spectrum) {
    std::size_t want = grp.roots().size() * static_cast<std::size_t>(grp.multiplicity);
    expected_total += want;
    std::size_t got = 0;
    for (double v : values) {
      if (grp.residual(v) < tol) ++got;
    }
    if (got != want) {
      if (why) {
        *why = e.name + ": group " + grp.label + " expects " + std::to_string(want) +
               " eigenvalues, found " + std::to_string(got);
      }
      return false;
    }
  }
  if (expected_total != values.size()) {
    if (why) {
      *why = e.name + ": expected " + std::to_string(expected_total) + " eigenvalues, have " +
             std::to_string(values.size());
    }
    return false;
  }
  return true;
}

}  // namespace abound
