#include "wzs/cli/cache.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>

namespace wzs::cli {

std::string RunRecord::key() const { return command + "|" + parameters.dump(); }

void to_json(json& j, const RunRecord& r) {
  j = {{"command", r.command},     {"parameters", r.parameters},
       {"result", r.result},       {"timestamp", r.timestamp},
       {"version", r.version},     {"duration_ms", r.duration_ms}};
}

void from_json(const json& j, RunRecord& r) {
  j.at("command").get_to(r.command);
  r.parameters = j.at("parameters");
  r.result = j.at("result");
  j.at("timestamp").get_to(r.timestamp);
  j.at("version").get_to(r.version);
  j.at("duration_ms").get_to(r.duration_ms);
}

Cache::Cache(std::filesystem::path path, std::ostream* warnings)
    : path_(std::move(path)), warnings_(warnings) {}

std::filesystem::path Cache::default_path() {
  if (const char* env = std::getenv("WZS_CACHE"); env != nullptr && *env != '\0') return env;
  return ".wzs-cache.jsonl";
}

Cache::Scan Cache::scan() const {
  const std::lock_guard<std::mutex> lock(mutex_);
  Scan out;
  std::ifstream in(path_);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.records.push_back(json::parse(line).get<RunRecord>());
    } catch (const std::exception& e) {
      ++out.bad_lines;
      if (warnings_ != nullptr) {
        *warnings_ << "warning: skipping unreadable cache line " << lineno << " in "
                   << path_.string() << "\n";
      }
    }
  }
  return out;
}

std::optional<RunRecord> Cache::lookup(const std::string& command, const json& parameters) const {
  const std::string key = command + "|" + parameters.dump();
  std::optional<RunRecord> hit;
  for (auto& r : scan().records) {
    if (r.key() == key && r.version == kVersion) hit = std::move(r);
  }
  return hit;
}

void Cache::append(const RunRecord& record) {
  const std::lock_guard<std::mutex> lock(mutex_);
  std::ofstream out(path_, std::ios::app);
  out << json(record).dump() << "\n";
}

void Cache::clear() {
  const std::lock_guard<std::mutex> lock(mutex_);
  std::ofstream out(path_, std::ios::trunc);
}

std::string now_timestamp() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace wzs::cli
