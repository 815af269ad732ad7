#include "cli/manifest.hpp"

#include <array>
#include <cstdio>
#include <fstream>

#include "labelflow/errors.hpp"

namespace labelflow::cli {

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[static_cast<std::size_t>(i)]);
      h *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

nlohmann::json to_json(const RunManifest& m) {
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto& in : m.inputs) inputs.push_back({{"path", in.path}, {"fnv1a64", in.fnv1a64}});
  return {
      {"command", m.command},
      {"arguments", m.arguments},
      {"config", m.config},
      {"inputs", std::move(inputs)},
      {"tool_version", m.tool_version},
      {"seed", m.seed},
      {"outputs", m.outputs},
  };
}

}  // namespace labelflow::cli
