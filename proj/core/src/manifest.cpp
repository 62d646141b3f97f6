#include "nulq/manifest.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "nulq/version.hpp"

namespace nulq {

void RunManifest::add_parameter(std::string name, std::string value) {
  parameters.emplace_back(std::move(name), std::move(value));
}

void RunManifest::add_result(std::string name, std::string value) {
  results.emplace_back(std::move(name), std::move(value));
}

void RunManifest::add_output(const std::filesystem::path& path) {
  OutputFile f;
  f.path = path.string();
  f.bytes = static_cast<std::uint64_t>(std::filesystem::file_size(path));
  outputs.push_back(std::move(f));
}

RunManifest make_manifest(std::string command,
                          std::string constant_convention) {
  RunManifest m;
  m.command = std::move(command);
  m.constant_convention = std::move(constant_convention);
  m.tool_version = version_string;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    m.timestamp = std::strtoll(epoch, nullptr, 10);
  }
  return m;
}

std::string to_json(const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["command"] = manifest.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : manifest.parameters) params[k] = v;
  j["parameters"] = std::move(params);
  j["constant_convention"] = manifest.constant_convention;
  nlohmann::ordered_json outs = nlohmann::ordered_json::array();
  for (const auto& f : manifest.outputs) {
    outs.push_back({{"path", f.path}, {"bytes", f.bytes}});
  }
  j["outputs"] = std::move(outs);
  j["tool_version"] = manifest.tool_version;
  if (manifest.timestamp) {
    j["timestamp"] = *manifest.timestamp;
  } else {
    j["timestamp"] = nullptr;
  }
  if (!manifest.results.empty()) {
    nlohmann::ordered_json res = nlohmann::ordered_json::object();
    for (const auto& [k, v] : manifest.results) res[k] = v;
    j["results"] = std::move(res);
  }
  if (!manifest.notes.empty()) j["notes"] = manifest.notes;
  return j.dump(2) + "\n";
}

void write_manifest(const RunManifest& manifest,
                    const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write manifest: " + path.string());
  }
  out << to_json(manifest);
}

}  // namespace nulq
