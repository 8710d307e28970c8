#pragma once

// JSON forms of results, and the append-only result cache.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "abound/bound_core.hpp"
#include "abound/enumerate.hpp"
#include "abound/spectra.hpp"
#include "json.hpp"

namespace abound {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

void to_json(Json& j, const ChebCombo& c);
void from_json(const Json& j, ChebCombo& c);
void to_json(Json& j, const BoundCertificate& c);
void from_json(const Json& j, BoundCertificate& c);
void to_json(Json& j, const Survivor& s);
void from_json(const Json& j, Survivor& s);
void to_json(Json& j, const ClassificationReport& r);
void from_json(const Json& j, ClassificationReport& r);
void to_json(Json& j, const Spectrum& s);
void from_json(const Json& j, Spectrum& s);

struct ResultRecord {
  std::string command;
  Json inputs;
  Json result;
  std::string timestamp;
  std::string tool_version = kToolVersion;
  std::uint64_t seed = 0;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

void to_json(Json& j, const ResultRecord& r);
void from_json(const Json& j, ResultRecord& r);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

// Line-delimited JSON records.  Lookups are a shortcut for repeated
// requests; nothing that checks a claim reads from here.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

  /// Cache path from an explicit flag, else $ABOUND_CACHE, else none.
  static std::optional<ResultCache> open(const std::string& flag);

  void append(const ResultRecord& r) const;
  /// Most recent record with equal command, inputs, seed and tool version.
  /// Unparseable lines are skipped.
  std::optional<ResultRecord> find(const std::string& command, const Json& inputs,
                                   std::uint64_t seed) const;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace abound
