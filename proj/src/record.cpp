#include "abound/record.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>

namespace abound {

void to_json(Json& j, const ChebCombo& c) {
  j = Json::array();
  for (double v : c.coeffs()) j.push_back(v);
}

void from_json(const Json& j, ChebCombo& c) { c = ChebCombo(j.get<std::vector<double>>()); }

void to_json(Json& j, const BoundCertificate& c) {
  j = Json{{"k", c.k},
           {"z", c.z},
           {"method", std::string(to_string(c.method))},
           {"f", c.f},
           {"s", c.s ? Json(*c.s) : Json(nullptr)},
           {"m", c.m ? Json(*c.m) : Json(nullptr)},
           {"M1", c.M1},
           {"M2", c.M2},
           {"c0", c.c0},
           {"vertex_bound", c.vertex_bound},
           {"vertex_bound_int", c.vertex_bound_int}};
}

void from_json(const Json& j, BoundCertificate& c) {
  c.k = j.at("k").get<int>();
  c.z = j.at("z").get<double>();
  c.method = method_from_string(j.at("method").get<std::string>());
  c.f = j.at("f").get<ChebCombo>();
  c.s = j.at("s").is_null() ? std::nullopt : std::optional<double>(j.at("s").get<double>());
  c.m = j.at("m").is_null() ? std::nullopt : std::optional<int>(j.at("m").get<int>());
  c.M1 = j.at("M1").get<double>();
  c.M2 = j.at("M2").get<double>();
  c.c0 = j.at("c0").get<double>();
  c.vertex_bound = j.at("vertex_bound").get<double>();
  c.vertex_bound_int = j.at("vertex_bound_int").get<long>();
}

void to_json(Json& j, const Survivor& s) {
  j = Json{{"graph6", s.graph6},
           {"n", s.n},
           {"mu1", s.mu1},
           {"atlas_name", s.atlas_name ? Json(*s.atlas_name) : Json(nullptr)},
           {"borderline", s.borderline}};
}

void from_json(const Json& j, Survivor& s) {
  s.graph6 = j.at("graph6").get<std::string>();
  s.n = j.at("n").get<int>();
  s.mu1 = j.at("mu1").get<double>();
  s.atlas_name = j.at("atlas_name").is_null()
                     ? std::nullopt
                     : std::optional<std::string>(j.at("atlas_name").get<std::string>());
  s.borderline = j.at("borderline").get<bool>();
}

namespace {

Json count_map(const std::map<int, long>& m) {
  Json j = Json::object();
  for (auto [n, c] : m) j[std::to_string(n)] = c;
  return j;
}

std::map<int, long> count_map_from(const Json& j) {
  std::map<int, long> m;
  for (auto it = j.begin(); it != j.end(); ++it) m[std::stoi(it.key())] = it.value().get<long>();
  return m;
}

}  // namespace

void to_json(Json& j, const ClassificationReport& r) {
  j = Json{{"k", r.k},
           {"z", r.z},
           {"n_max", r.n_max},
           {"bound", r.bound ? Json(*r.bound) : Json(nullptr)},
           {"bound_method", r.bound_method},
           {"complete", r.complete},
           {"graphs_per_n", count_map(r.graphs_per_n)},
           {"survivors_per_n", count_map(r.survivors_per_n)},
           {"survivors", r.survivors},
           {"realized_max_n", r.realized_max_n}};
}

void from_json(const Json& j, ClassificationReport& r) {
  r.k = j.at("k").get<int>();
  r.z = j.at("z").get<double>();
  r.n_max = j.at("n_max").get<int>();
  r.bound = j.at("bound").is_null() ? std::nullopt : std::optional<long>(j.at("bound").get<long>());
  r.bound_method = j.at("bound_method").get<std::string>();
  r.complete = j.at("complete").get<bool>();
  r.graphs_per_n = count_map_from(j.at("graphs_per_n"));
  r.survivors_per_n = count_map_from(j.at("survivors_per_n"));
  r.survivors = j.at("survivors").get<std::vector<Survivor>>();
  r.realized_max_n = j.at("realized_max_n").get<int>();
}

void to_json(Json& j, const Spectrum& s) { j = Json{{"values", s.values}, {"tol", s.tol}}; }

void from_json(const Json& j, Spectrum& s) {
  s.values = j.at("values").get<std::vector<double>>();
  s.tol = j.at("tol").get<double>();
}

void to_json(Json& j, const ResultRecord& r) {
  j = Json{{"command", r.command},     {"inputs", r.inputs},
           {"result", r.result},       {"timestamp", r.timestamp},
           {"tool_version", r.tool_version}, {"seed", r.seed}};
}

void from_json(const Json& j, ResultRecord& r) {
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.result = j.at("result");
  r.timestamp = j.at("timestamp").get<std::string>();
  r.tool_version = j.at("tool_version").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::optional<ResultCache> ResultCache::open(const std::string& flag) {
  if (!flag.empty()) return ResultCache(flag);
  if (const char* env = std::getenv("ABOUND_CACHE"); env && *env) return ResultCache(env);
  return std::nullopt;
}

void ResultCache::append(const ResultRecord& r) const {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file " + path_.string());
  out << Json(r).dump() << '\n';
}

std::optional<ResultRecord> ResultCache::find(const std::string& command, const Json& inputs,
                                              std::uint64_t seed) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  std::optional<ResultRecord> hit;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      ResultRecord r = Json::parse(line).get<ResultRecord>();
      if (r.command == command && r.inputs == inputs && r.seed == seed &&
          r.tool_version == kToolVersion) {
        hit = std::move(r);
      }
    } catch (const std::exception&) {
    }
  }
  return hit;
}

}  // namespace abound
