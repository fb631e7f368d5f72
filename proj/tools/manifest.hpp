#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace ale::cli {

struct Tolerances {
  double closure = 1e-8;
  double incidence = 1e-10;
};

// Profile named by ALE_TOLERANCE_PROFILE: "default", "strict" or "loose".
Tolerances tolerance_profile(const char* name);

struct RunManifest {
  std::string subcommand;
  std::string input_digest;
  Tolerances tolerances;
  std::uint64_t seed = 0;
  std::string version;

  nlohmann::ordered_json to_json() const;
};

// FNV-1a over the bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

const char* tool_version();

}  // namespace ale::cli
