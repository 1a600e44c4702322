#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kneser/version.hpp"

namespace kneser {

/// FNV-1a digest used to fingerprint command inputs in reports.
inline std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

inline std::string digest_string(std::string_view data) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(fnv1a(data)));
  return buf;
}

/// Report envelope shared by all CLI commands.  The results payload is
/// deterministic for identical inputs; timing_ms is informational only.
inline nlohmann::json make_report(const std::string& command_echo, const std::string& inputs,
                                  nlohmann::json results, double timing_ms) {
  return nlohmann::json{{"artifact", kArtifactName}, {"version", kVersion},
                        {"command", command_echo},  {"inputs_digest", digest_string(inputs)},
                        {"timing_ms", timing_ms},   {"results", std::move(results)}};
}

/// Structural check against the published report schema
/// (docs/report.schema.json).
inline bool report_schema_valid(const nlohmann::json& report) {
  if (!report.is_object()) return false;
  if (!report.contains("artifact") || !report.at("artifact").is_string()) return false;
  if (!report.contains("version") || !report.at("version").is_string()) return false;
  if (!report.contains("command") || !report.at("command").is_string()) return false;
  if (!report.contains("inputs_digest") || !report.at("inputs_digest").is_string()) return false;
  if (!report.contains("timing_ms") || !report.at("timing_ms").is_number()) return false;
  if (!report.contains("results")) return false;
  std::string digest = report.at("inputs_digest").get<std::string>();
  return digest.rfind("fnv1a:", 0) == 0 && digest.size() == 22;
}

}  // namespace kneser
