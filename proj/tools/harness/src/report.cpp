#include "bqha_harness/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace bqha::harness {

namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json Record::to_json() const {
  return {{"name", name},         {"anchor", anchor}, {"measured", number(measured)},
          {"target", number(target)}, {"tolerance", number(tolerance)}, {"pass", pass},
          {"diagnostics", diagnostics}};
}

Record bound_record(std::string name, std::string anchor, double measured, double target, double tolerance,
                    json diagnostics) {
  const bool ok = std::isfinite(measured) && measured <= target + tolerance;
  return {std::move(name), std::move(anchor), measured, target, tolerance, ok, std::move(diagnostics)};
}

Record error_record(std::string name, std::string anchor, double error, double tolerance, json diagnostics) {
  const bool ok = std::isfinite(error) && std::abs(error) <= tolerance;
  return {std::move(name), std::move(anchor), error, 0.0, tolerance, ok, std::move(diagnostics)};
}

int RunReport::passed() const {
  int k = 0;
  for (const auto& r : records) k += r.pass;
  return k;
}

int RunReport::failed() const { return static_cast<int>(records.size()) - passed(); }

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

json RunReport::to_json() const {
  json recs = json::array();
  for (const auto& r : records) recs.push_back(r.to_json());
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a(config_echo.dump())));
  return {{"version", kVersion},
          {"command", command},
          {"config_echo", config_echo},
          {"environment", {{"config_hash", std::string("fnv1a64:") + hash}, {"seed", seed}}},
          {"records", recs},
          {"summary", {{"pass", passed()}, {"fail", failed()}}}};
}

void RunReport::write(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json().dump(2) << "\n";
}

}  // namespace bqha::harness
