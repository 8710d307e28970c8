#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "abound/errors.hpp"
#include "abound/nelder_mead.hpp"
#include "abound/optimizer.hpp"
#include "doctest.h"

using namespace abound;

namespace {

OptimizerConfig quick(int terms, int restarts = 16) {
  OptimizerConfig cfg;
  cfg.terms = terms;
  cfg.restarts = restarts;
  cfg.seed = 7;
  return cfg;
}

double norm2(const ChebCombo& f) {
  double s = 0.0;
  for (double c : f.coeffs()) s += c * c;
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("nelder_mead minimizes smooth test functions") {
  auto rosen = [](const std::vector<double>& x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  NelderMeadOptions opts;
  opts.max_iters = 5000;
  NelderMeadResult r = nelder_mead(rosen, {-1.2, 1.0}, opts);
  CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r.x[1] == doctest::Approx(1.0).epsilon(1e-4));

  auto bowl = [](const std::vector<double>& x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (i + 1.0) * (x[i] - 0.5) * (x[i] - 0.5);
    return s;
  };
  NelderMeadResult b = nelder_mead(bowl, std::vector<double>(6, 3.0), opts);
  CHECK(b.value < 1e-10);
  CHECK_THROWS_AS(nelder_mead(bowl, {}), std::invalid_argument);
}

TEST_CASE("3-regular constants at z = 1") {
  BoundCertificate c3 = optimize_nterm(3, 1.0, quick(3));
  CHECK(c3.vertex_bound <= 24.0);
  CHECK(c3.mass_lower_bound() >= 1.0 / 24.0);
  BoundCertificate c5 = optimize_nterm(3, 1.0, quick(5));
  CHECK(c5.vertex_bound <= 21.0);
  CHECK(c5.vertex_bound_int <= 20);
}

TEST_CASE("returned certificates are normalized and feasible") {
  for (auto [k, z, n] : {std::tuple{3, 0.0, 3}, {4, 1.0, 5}, {6, 2.0, 6}, {3, -1.0, 2}}) {
    BoundCertificate c = optimize_nterm(k, z, quick(n, 8));
    CHECK(c.method == Method::nterm);
    CHECK(c.f.all_nonnegative());
    CHECK(c.f.coeff(0) == 0.0);
    CHECK(c.f.degree() <= static_cast<std::size_t>(n));
    CHECK(norm2(c.f) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.M1 <= -1e-9);
    BoundCertificate again = bound_from_function(c.f, k, z, Method::nterm);
    CHECK(again == c);
  }
}

TEST_CASE("determinism across seeds and thread counts") {
  OptimizerConfig a = quick(5, 12);
  a.threads = 1;
  OptimizerConfig b = a;
  b.threads = 4;
  BoundCertificate ca = optimize_nterm(4, 1.0, a);
  BoundCertificate cb = optimize_nterm(4, 1.0, b);
  CHECK(std::ranges::equal(ca.f.coeffs(), cb.f.coeffs()));
  CHECK(ca == cb);
  BoundCertificate cc = optimize_nterm(4, 1.0, a);
  CHECK(ca == cc);
}

TEST_CASE("adding terms never hurts") {
  for (double z : {0.0, 1.0}) {
    for (int n = 2; n <= 4; ++n) {
      // Two terms cannot certify z >= (k-1)/k at all; that side is +inf.
      double lo = HUGE_VAL;
      try {
        lo = optimize_nterm(3, z, quick(n)).vertex_bound;
      } catch (const NoFeasiblePoint&) {
        CHECK(z >= 2.0 / 3.0);
      }
      double hi = optimize_nterm(3, z, quick(n + 1)).vertex_bound;
      CHECK(hi <= lo + 1e-6);
    }
  }
}

TEST_CASE("no feasible point") {
  // A single V_1 term is negative on I1 only when z < 0.
  CHECK_THROWS_AS(optimize_nterm(3, 0.5, quick(1, 4)), NoFeasiblePoint);
  CHECK_NOTHROW(optimize_nterm(3, -0.5, quick(1, 4)));
}

TEST_CASE("config validation") {
  OptimizerConfig c;
  c.terms = 0;
  CHECK_THROWS_AS(optimize_nterm(3, 0.0, c), std::invalid_argument);
  c = OptimizerConfig{};
  c.restarts = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = OptimizerConfig{};
  CHECK_THROWS_AS(optimize_nterm(2, 0.0, c), std::invalid_argument);
  CHECK_THROWS_AS(optimize_nterm(3, 3.0, c), std::invalid_argument);
}

TEST_CASE("table_bounds for k = 4") {
  OptimizerConfig cfg = quick(7, 16);
  std::vector<TableEntry> rows = table_bounds(4, {-1.0, 0.0, 1.0, 2.0}, cfg);
  REQUIRE(rows.size() == 4);
  const long paper[] = {5, 11, 23, 77};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    REQUIRE(rows[i].best);
    CHECK(rows[i].best->vertex_bound_int <= paper[i]);
  }
  // (z - k) / z = 5 exactly, from the linear certificate.
  CHECK(rows[0].best->vertex_bound_int == 5);
}

TEST_CASE("table_bounds collects per-entry errors") {
  OptimizerConfig cfg = quick(1, 2);
  std::vector<TableEntry> rows = table_bounds(3, {0.5, 5.0}, cfg);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].best);  // machine and two-term still apply
  CHECK_FALSE(rows[1].best);
  CHECK(rows[1].errors.size() >= 2);
}
