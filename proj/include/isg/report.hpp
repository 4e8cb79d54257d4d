#ifndef ISG_REPORT_HPP
#define ISG_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace isg {

inline constexpr const char* kToolkitVersion = "1.0.0";

// One verified statement: what was checked, whether it held, and a pointer
// at the offending data when it did not.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
};

// 64 bit FNV-1a of the bytes, rendered as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& data);

// The single document shape shared by every command: `meta` identifies the
// run, `instance` echoes what was examined, `checks` lists the outcomes.
// Key order comes from the JSON library's sorted objects, so the same
// content always renders to the same bytes.
nlohmann::json make_report(const std::string& command, std::uint64_t seed,
                           const nlohmann::json& instance,
                           const std::vector<CheckResult>& checks);

// Rendered document with a trailing newline.
std::string render_report(const nlohmann::json& doc);

}  // namespace isg

#endif
