#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace bqha::harness {

using nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

struct Record {
  std::string name;
  std::string anchor;  // the identity or bound being checked
  double measured = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  json diagnostics = json::object();
  json to_json() const;
};

// measured <= target + tolerance
Record bound_record(std::string name, std::string anchor, double measured, double target, double tolerance,
                    json diagnostics = json::object());
// |error| <= tolerance
Record error_record(std::string name, std::string anchor, double error, double tolerance,
                    json diagnostics = json::object());

struct RunReport {
  std::string command;
  json config_echo;
  std::uint64_t seed = 0;
  std::vector<Record> records;

  void add(Record r) { records.push_back(std::move(r)); }
  int passed() const;
  int failed() const;
  json to_json() const;
  void write(const std::filesystem::path& path) const;
};

std::uint64_t fnv1a(const std::string& bytes);

}  // namespace bqha::harness
