#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "abound/atlas.hpp"
#include "abound/bound_core.hpp"
#include "abound/enumerate.hpp"
#include "abound/graph6.hpp"
#include "abound/optimizer.hpp"
#include "abound/record.hpp"
#include "abound/tables.hpp"
#include "doctest.h"

using namespace abound;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("abound_test_" + name);
  std::filesystem::remove(p);
  return p;
}

template <class T>
T round_trip(const T& value) {
  return Json::parse(Json(value).dump()).template get<T>();
}

}  // namespace

TEST_CASE("certificates survive a print/parse cycle") {
  BoundCertificate lin = linear_bound(5, -1.0);
  CHECK(round_trip(lin) == lin);
  BoundCertificate mach = machine_bound(4, 1.0, std::nullopt, std::nullopt);
  REQUIRE(mach.s.has_value());
  CHECK(round_trip(mach) == mach);
  OptimizerConfig cfg;
  cfg.terms = 4;
  cfg.restarts = 4;
  BoundCertificate opt = optimize_nterm(3, 1.0, cfg);
  CHECK(round_trip(opt) == opt);

  Json j = Json(lin);
  CHECK(j["s"].is_null());
  CHECK(j["m"].is_null());
  CHECK(j["method"] == "linear");
  for (const char* key : {"k", "z", "f", "M1", "M2", "c0", "vertex_bound", "vertex_bound_int"}) {
    CHECK(j.contains(key));
  }
}

TEST_CASE("reports and spectra survive a print/parse cycle") {
  ClassificationReport rep = classify(3, 0.0, 8, ClassifyOptions{});
  ClassificationReport back = round_trip(rep);
  CHECK(Json(back) == Json(rep));
  REQUIRE(back.survivors.size() == rep.survivors.size());
  CHECK(back.survivors[0].graph6 == rep.survivors[0].graph6);
  CHECK(back.graphs_per_n == rep.graphs_per_n);

  Spectrum sp = adjacency_spectrum(atlas_graph("petersen").graph);
  Spectrum sb = round_trip(sp);
  CHECK(sb.values == sp.values);
  CHECK(sb.tol == sp.tol);
}

TEST_CASE("result records round-trip and reproduce from inputs and seed") {
  OptimizerConfig cfg;
  cfg.terms = 5;
  cfg.restarts = 6;
  cfg.seed = 17;
  auto make = [&] {
    return ResultRecord{"bound", Json{{"k", 3}, {"z", 1.0}, {"terms", 5}},
                        Json(optimize_nterm(3, 1.0, cfg)), utc_timestamp(), kToolVersion, 17};
  };
  ResultRecord a = make();
  CHECK(round_trip(a) == a);
  ResultRecord b = make();
  b.timestamp = a.timestamp;
  CHECK(a == b);
  CHECK(a.timestamp.size() == 20);
  CHECK(a.timestamp.back() == 'Z');
}

TEST_CASE("cache appends and finds the latest matching record") {
  auto path = scratch("cache.jsonl");
  ResultCache cache(path);
  Json in = {{"k", 4}, {"z", 0.0}};
  CHECK_FALSE(cache.find("bound", in, 0).has_value());

  ResultRecord r1{"bound", in, Json(linear_bound(4, -0.5)), "2020-01-01T00:00:00Z", kToolVersion, 0};
  ResultRecord r2 = r1;
  r2.timestamp = "2021-01-01T00:00:00Z";
  cache.append(r1);
  {
    std::ofstream junk(path, std::ios::app);
    junk << "not json\n{\"command\": 1}\n";
  }
  cache.append(r2);

  auto hit = cache.find("bound", in, 0);
  REQUIRE(hit.has_value());
  CHECK(*hit == r2);
  CHECK_FALSE(cache.find("bound", in, 1).has_value());
  CHECK_FALSE(cache.find("bound", Json{{"k", 4}, {"z", 1.0}}, 0).has_value());
  CHECK_FALSE(cache.find("classify", in, 0).has_value());
  std::filesystem::remove(path);
}

TEST_CASE("cache path comes from the flag, then the environment") {
  CHECK(ResultCache::open("/tmp/x.jsonl")->path() == "/tmp/x.jsonl");
  ::setenv("ABOUND_CACHE", "/tmp/env.jsonl", 1);
  CHECK(ResultCache::open("")->path() == "/tmp/env.jsonl");
  CHECK(ResultCache::open("/tmp/y.jsonl")->path() == "/tmp/y.jsonl");
  ::unsetenv("ABOUND_CACHE");
  CHECK_FALSE(ResultCache::open("").has_value());
}

TEST_CASE("graph6 round-trips every enumerated graph up to 12 vertices") {
  long total = 0;
  for (auto [k, n_hi] : {std::pair{3, 12}, std::pair{4, 11}}) {
    for (int n = k + 1; n <= n_hi; ++n) {
      if (n * k % 2) continue;
      for (const Graph& g : enumerate_regular(k, n, {})) {
        std::string s = to_graph6(g);
        CHECK(from_graph6(s) == g);
        CHECK(to_graph6(from_graph6(">>graph6<<" + s)) == s);
        ++total;
      }
    }
  }
  CHECK(total == 1 + 2 + 5 + 19 + 85 + 1 + 1 + 2 + 6 + 16 + 59 + 265);
}

TEST_CASE("reference tables and the tolerance policy") {
  const auto& cells = reference_cells();
  CHECK(cells.size() == 27);
  int z2 = 0;
  for (const auto& c : cells) {
    CHECK(c.k >= 4);
    CHECK(c.k <= 10);
    if (c.z == 2.0) {
      ++z2;
      CHECK(allowed_bound(c) == doctest::Approx(1.15 * c.value));
    } else {
      CHECK(allowed_bound(c) == c.value);
    }
  }
  CHECK(z2 == 6);  // no z = 2 entry at k = 5

  OptimizerConfig cfg;
  cfg.terms = 7;
  cfg.restarts = 8;
  auto checks = verify_reference_tables(5, 5, cfg);
  REQUIRE(checks.size() == 3);
  for (const auto& c : checks) {
    CHECK(c.cell.k == 5);
    REQUIRE(c.best.has_value());
    CHECK(c.pass);
    CHECK(c.best->vertex_bound_int <= c.cell.value);
  }
  CHECK(verify_reference_tables(11, 12, cfg).empty());
}
