#include "manifest.hpp"

#include <cstdio>
#include <string_view>

#include "ale/errors.hpp"

#ifndef ALE_VERSION
#define ALE_VERSION "0.0.0"
#endif

namespace ale::cli {

Tolerances tolerance_profile(const char* name) {
  const std::string_view p = name ? name : "default";
  if (p.empty() || p == "default") return {};
  if (p == "strict") return {1e-10, 1e-12};
  if (p == "loose") return {1e-6, 1e-8};
  throw Error(ErrorKind::Domain, "unknown tolerance profile '" + std::string(p) + "'");
}

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["subcommand"] = subcommand;
  j["input_digest"] = input_digest;
  j["tolerances"] = {{"closure", tolerances.closure}, {"incidence", tolerances.incidence}};
  j["seed"] = seed;
  j["version"] = version;
  return j;
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

const char* tool_version() { return ALE_VERSION; }

}  // namespace ale::cli
