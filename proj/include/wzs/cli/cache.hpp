#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wzs/cli/json_io.hpp"

namespace wzs::cli {

struct RunRecord {
  std::string command;
  json parameters;  // object; key order is normalized by the json type
  json result;
  std::string timestamp;
  std::string version = kVersion;
  double duration_ms = 0.0;

  std::string key() const;
  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

void to_json(json& j, const RunRecord& r);
void from_json(const json& j, RunRecord& r);

/// Append-only JSON-lines store of finished runs. Unreadable lines are
/// skipped with a warning; the newest record for a key wins.
class Cache {
 public:
  explicit Cache(std::filesystem::path path, std::ostream* warnings = nullptr);

  /// $WZS_CACHE, or ./.wzs-cache.jsonl.
  static std::filesystem::path default_path();

  const std::filesystem::path& path() const { return path_; }

  std::optional<RunRecord> lookup(const std::string& command, const json& parameters) const;
  void append(const RunRecord& record);

  struct Scan {
    std::vector<RunRecord> records;
    std::size_t bad_lines = 0;
  };
  Scan scan() const;
  void clear();

 private:
  std::filesystem::path path_;
  std::ostream* warnings_;
  mutable std::mutex mutex_;
};

std::string now_timestamp();

}  // namespace wzs::cli
