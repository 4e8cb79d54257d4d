#include "isg/report.hpp"

#include <cstdio>

namespace isg {

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

nlohmann::json make_report(const std::string& command, std::uint64_t seed,
                           const nlohmann::json& instance,
                           const std::vector<CheckResult>& checks) {
  nlohmann::json doc;
  doc["meta"]["tool"] = "isgtool";
  doc["meta"]["version"] = kToolkitVersion;
  doc["meta"]["command"] = command;
  doc["meta"]["seed"] = seed;
  doc["meta"]["config_hash"] = fnv1a_hex(instance.dump());
  doc["instance"] = instance;

  auto arr = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["status"] = c.pass ? "pass" : "fail";
    e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  doc["checks"] = std::move(arr);
  return doc;
}

std::string render_report(const nlohmann::json& doc) {
  return doc.dump(2) + "\n";
}

}  // namespace isg
