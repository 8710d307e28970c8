// Acceptance run: one PASS/FAIL line per criterion.  Tolerances and time
// limits are fixed below; the exit status is nonzero if any line fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "abound/atlas.hpp"
#include "abound/bound_core.hpp"
#include "abound/enumerate.hpp"
#include "abound/errors.hpp"
#include "abound/graph6.hpp"
#include "abound/optimizer.hpp"
#include "abound/spectra.hpp"
#include "abound/tables.hpp"
#include "oracles.hpp"

using namespace abound;

namespace {

// Pinned tolerances.
constexpr double kIdentityRelTol = 1e-9;   // (x - alpha) F_hat = F, relative to max(1, |F|)
constexpr double kYPolyRelTol = 1e-9;      // y_poly vs f_hat, relative to the largest coefficient
constexpr double kShiftCoeffTol = 1e-12;   // shifted coefficients >= -tol
// Closed-form vertex bounds may sit above the exact value by the upward
// rounding of M1, M2 and c0 (about 2e-9 relative), never below it.
constexpr double kClosedFormRelTol = 1e-8;
constexpr double kSpectrumTol = 1e-7;      // atlas spectra and minimal-polynomial residuals
constexpr double kTraceZeroTol = 1e-8;     // trace and second moment of computed spectra
constexpr double kTraceFormulaTol = 1e-7;  // S_m >= -tol * n
constexpr double kZ2Factor = 1.15;         // z = 2 table cells

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    o.pass = false;
    o.detail += "; over the time limit";
  }
  if (!o.pass) ++failures;
  std::printf("%s %2d %s [%.2fs / %.0fs] %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              limit_s, o.detail.c_str());
  std::fflush(stdout);
}

std::string join(const std::set<std::string>& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? ", " : "") + x;
  return out + "}";
}

std::set<std::string> names_of(const ClassificationReport& r) {
  std::set<std::string> out;
  for (const auto& s : r.survivors) out.insert(s.atlas_name.value_or(s.graph6));
  return out;
}

std::vector<Graph> emitted;  // graphs produced by criteria 7 and 8, for criterion 9

Outcome certificate_algebra() {
  double worst_identity = 0.0;
  double worst_ypoly = 0.0;
  bool nonneg = true;
  for (int m = 1; m <= 12; ++m) {
    ChebCombo fh = f_hat(m);
    ChebCombo fb = f_big(m);
    nonneg = nonneg && fh.all_nonnegative();
    double a = alpha(m);
    const int count = 4 * m;
    for (int i = 0; i < count; ++i) {
      double x = 2.5 * std::cos((2.0 * i + 1.0) * std::numbers::pi / (2.0 * count));
      double want = fb(x);
      worst_identity = std::max(worst_identity, std::abs((x - a) * fh(x) - want) / std::max(1.0, std::abs(want)));
    }
    ChebCombo y = y_poly(m);
    double scale = *std::max_element(fh.coeffs().begin(), fh.coeffs().end());
    std::size_t len = std::max(y.coeffs().size(), fh.coeffs().size());
    for (std::size_t j = 0; j < len; ++j) {
      worst_ypoly = std::max(worst_ypoly, std::abs(y.coeff(j) - fh.coeff(j)) / scale);
    }
  }
  std::ostringstream os;
  os << "coefficients nonnegative: " << (nonneg ? "yes" : "no") << ", identity rel err " << worst_identity
     << ", y_poly rel err " << worst_ypoly;
  return {nonneg && worst_identity <= kIdentityRelTol && worst_ypoly <= kYPolyRelTol, os.str()};
}

Outcome shift_positivity() {
  double lowest = INFINITY;
  double smallest_c0 = INFINITY;
  for (int m = 1; m <= 8; ++m) {
    for (double s : {0.05, 0.3, 0.7}) {
      ChebCombo g = shift_expand(f_hat(m), s);
      for (double c : g.coeffs()) lowest = std::min(lowest, c);
      smallest_c0 = std::min(smallest_c0, g.coeff(0));
    }
  }
  std::ostringstream os;
  os << "min coefficient " << lowest << ", min c0 " << smallest_c0;
  return {lowest >= -kShiftCoeffTol && smallest_c0 > 0.0, os.str()};
}

bool near_above(double got, double exact) {
  return got >= exact && got - exact <= kClosedFormRelTol * exact;
}

Outcome closed_forms() {
  std::ostringstream os;
  bool ok = true;
  for (int k = 3; k <= 10; ++k) {
    BoundCertificate lin = linear_bound(k, -1.0);
    if (lin.vertex_bound_int != k + 1 || !near_above(lin.vertex_bound, k + 1.0)) {
      ok = false;
      os << "linear k=" << k << " gave " << lin.vertex_bound << "; ";
    }
    double want = 2.0 * k * k / (k - 1.0);
    BoundCertificate two = two_term_bound(k, 0.0);
    if (!near_above(two.vertex_bound, want)) {
      ok = false;
      os << "two-term k=" << k << " gave " << two.vertex_bound << " vs " << want << "; ";
    }
  }
  BoundCertificate mach = machine_bound(3, -1.0, std::nullopt, std::nullopt);
  if (mach.vertex_bound_int != 4) {
    ok = false;
    os << "machine(3,-1) gave " << mach.vertex_bound_int << "; ";
  }
  os << "linear(k,-1) = k+1, two-term(k,0) = 2k^2/(k-1) for k = 3..10, machine(3,-1) -> "
     << mach.vertex_bound_int;
  return {ok, os.str()};
}

Outcome paper_constants() {
  OptimizerConfig cfg;  // default restarts
  std::ostringstream os;
  cfg.terms = 3;
  BoundCertificate n3 = optimize_nterm(3, 1.0, cfg);
  cfg.terms = 5;
  BoundCertificate n5 = optimize_nterm(3, 1.0, cfg);
  cfg.terms = 6;
  BoundCertificate n6 = optimize_nterm(3, 2.0, cfg);
  bool ok3 = n3.mass_lower_bound() >= 1.0 / 24.0;
  bool ok5 = n5.mass_lower_bound() >= 1.0 / 21.0 && n5.vertex_bound_int <= 20;
  bool ok6 = n6.vertex_bound_int <= 105;
  os.precision(8);
  os << "(3,1) N=3: C = 1/" << n3.vertex_bound << (ok3 ? " ok" : " MISSED") << "; (3,1) N=5: C = 1/"
     << n5.vertex_bound << ", int " << n5.vertex_bound_int << (ok5 ? " ok" : " MISSED") << "; (3,2) N=6: "
     << n6.vertex_bound << ", int " << n6.vertex_bound_int << (ok6 ? " ok" : " MISSED (target 105)");
  if (!ok6) {
    cfg.terms = 7;
    BoundCertificate n7 = optimize_nterm(3, 2.0, cfg);
    os << "; for reference N=7 gives " << n7.vertex_bound;
  }
  return {ok3 && ok5 && ok6, os.str()};
}

Outcome tables() {
  OptimizerConfig cfg;
  cfg.terms = 7;
  std::vector<CellCheck> checks = verify_reference_tables(4, 10, cfg);
  std::ostringstream os;
  int passed = 0;
  for (const CellCheck& c : checks) {
    bool ok = c.best.has_value();
    if (ok && c.cell.z <= 1.0) ok = c.best->vertex_bound_int <= c.cell.value;
    if (ok && c.cell.z > 1.0) ok = c.best->vertex_bound <= kZ2Factor * c.cell.value;
    if (ok != c.pass) ok = false;  // the library's own verdict must agree
    passed += ok;
    if (!ok) os << "k=" << c.cell.k << " z=" << c.cell.z << " failed; ";
  }
  os << passed << "/" << checks.size() << " cells within policy";
  return {passed == static_cast<int>(checks.size()) && checks.size() == 27, os.str()};
}

std::vector<double> listed_wagner() {
  const double r2 = std::sqrt(2.0);
  return {3, 1, 1, -1 + r2, -1 + r2, -1, -1 - r2, -1 + r2};
}

Outcome atlas_spectra() {
  std::ostringstream os;
  bool ok = true;
  int matched = 0;
  std::vector<AtlasEntry> all = atlas_all();
  for (const AtlasEntry& e : all) {
    std::vector<double> v = adjacency_spectrum(e.graph).values;
    std::string why;
    if (spectrum_matches(e, v, kSpectrumTol, &why)) {
      ++matched;
    } else {
      ok = false;
      os << e.name << ": " << why << "; ";
    }
  }
  // The two misprinted entries: the printed multisets fail the trace test,
  // the computed spectra pass trace 0 and sum of squares n k.
  std::vector<double> cube_listed = {3, 1, 1, 1, -1, -1, -1, 3};
  for (auto [name, listed] : {std::pair{"wagner", listed_wagner()}, std::pair{"cube", cube_listed}}) {
    AtlasEntry e = atlas_graph(name);
    std::vector<double> v = adjacency_spectrum(e.graph).values;
    double tr = std::accumulate(v.begin(), v.end(), 0.0);
    double sq = std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
    double listed_tr = std::accumulate(listed.begin(), listed.end(), 0.0);
    bool typo_ok = std::abs(tr) < kTraceZeroTol && std::abs(sq - e.graph.n() * 3.0) < kTraceZeroTol &&
                   std::abs(listed_tr) > 0.5;
    ok = ok && typo_ok;
    os << name << " printed trace " << listed_tr << " vs computed " << (std::abs(tr) < 1e-12 ? 0.0 : tr)
       << (typo_ok ? "" : " (oracle mismatch)") << "; ";
  }
  os << matched << "/" << all.size() << " entries match";
  return {ok && all.size() == 13, os.str()};
}

Outcome cubic_classification() {
  std::ostringstream os;
  bool ok = true;
  const int want[] = {1, 2, 5, 19};
  const int ns[] = {4, 6, 8, 10};
  for (int i = 0; i < 4; ++i) {
    std::vector<Graph> gs = enumerate_regular(3, ns[i], {});
    if (static_cast<int>(gs.size()) != want[i]) {
      ok = false;
      os << "n=" << ns[i] << " count " << gs.size() << "; ";
    }
    if (ns[i] <= 8) {
      std::vector<Graph> reps = oracle::dedup(oracle::labeled_regular(3, ns[i]));
      bool same = reps.size() == gs.size();
      for (const Graph& g : gs) {
        same = same && std::any_of(reps.begin(), reps.end(), [&](const Graph& r) { return oracle::isomorphic(g, r); });
      }
      if (!same) {
        ok = false;
        os << "n=" << ns[i] << " disagrees with the labeled oracle; ";
      }
    }
    emitted.insert(emitted.end(), gs.begin(), gs.end());
  }
  os << "counts 1,2,5,19 checked; ";

  auto check = [&](double z, const std::set<std::string>& expected) {
    ClassificationReport r = classify(3, z, 10, ClassifyOptions{});
    for (const auto& s : r.survivors) emitted.push_back(from_graph6(s.graph6));
    std::set<std::string> got = names_of(r);
    bool same = got == expected;
    ok = ok && same;
    os << "classify(3," << z << ",10) = " << join(got);
    if (!same) os << " expected " << join(expected);
    os << "; ";
  };
  std::set<std::string> six;
  for (const AtlasEntry& e : atlas_all(3)) six.insert(e.name);
  check(1.0, six);
  check(0.0, {"K4", "Y2_prism"});
  check(-1.0, {"K4"});
  return {ok, os.str()};
}

Outcome quartic_classification() {
  ClassificationReport r = classify(4, 1.0, 9, ClassifyOptions{});
  for (const auto& s : r.survivors) emitted.push_back(from_graph6(s.graph6));
  std::set<std::string> seven;
  for (const AtlasEntry& e : atlas_all(4)) seven.insert(e.name);
  std::set<std::string> got = names_of(r);
  std::ostringstream os;
  os << "classify(4,1,9) returned " << got.size() << " graphs " << join(got);
  if (got != seven) os << " expected the seven " << join(seven);
  return {got == seven, os.str()};
}

Outcome trace_formula() {
  if (emitted.empty()) return {false, "no graphs from criteria 7-8"};
  double worst = INFINITY;
  for (const Graph& g : emitted) {
    std::vector<double> s = trace_formula_check(g, 20);
    double lo = *std::min_element(s.begin(), s.end());
    worst = std::min(worst, lo / g.n());
  }
  std::ostringstream os;
  os << emitted.size() << " graphs, m <= 20, min S_m / n = " << worst;
  return {worst >= -kTraceFormulaTol, os.str()};
}

Outcome honesty() {
  std::ostringstream os;
  bool ok = true;
  try {
    classify(3, 2.0, std::nullopt, ClassifyOptions{});
    ok = false;
    os << "(3,2) did not refuse; ";
  } catch (const BudgetExceeded& e) {
    ok = ok && e.required() > kMaxCanonicalVertices;
    os << "(3,2) refused, needs " << e.required() << " vertices; ";
  }
  ClassificationReport r = classify(3, 1.0, std::nullopt, ClassifyOptions{});
  ok = ok && !r.complete && r.bound && *r.bound == 20 && r.n_max == 10;
  os << "(3,1) enumerated to n=" << r.n_max << " of bound " << (r.bound ? *r.bound : -1)
     << (r.complete ? " marked complete" : " marked incomplete") << "; not acceptance targets";
  return {ok, os.str()};
}

}  // namespace

int main() {
  run(1, "certificate algebra", 1.0, certificate_algebra);
  run(2, "shift positivity", 1.0, shift_positivity);
  run(3, "closed-form bounds", 1.0, closed_forms);
  run(4, "paper constants", 3 * 300.0, paper_constants);
  run(5, "tables for k = 4..10", 1800.0, tables);
  run(6, "atlas spectra", 5.0, atlas_spectra);
  run(7, "cubic classification", 120.0, cubic_classification);
  run(8, "quartic classification", 600.0, quartic_classification);
  run(9, "trace formula on emitted graphs", 120.0, trace_formula);
  run(10, "out-of-scale runs are refused or marked partial", 60.0, honesty);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
