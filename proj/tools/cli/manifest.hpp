#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace labelflow::cli {

/// FNV-1a 64 over the file's bytes, as 16 lowercase hex digits.
std::string file_digest(const std::string& path);

struct InputDigest {
  std::string path;
  std::string fnv1a64;
};

/// Everything needed to re-run a command and get identical outputs.
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  nlohmann::json config;
  std::vector<InputDigest> inputs;
  std::string tool_version;
  std::uint64_t seed = 0;
  std::vector<std::string> outputs;
};

nlohmann::json to_json(const RunManifest& m);

}  // namespace labelflow::cli
