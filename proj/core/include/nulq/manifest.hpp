// Reproducibility records written next to every batch of CLI outputs. The
// JSON layout is pinned by docs/manifest.schema.json; manifests carry no
// wall-clock data unless SOURCE_DATE_EPOCH is set, so identical runs produce
// identical files.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nulq {

struct OutputFile {
  std::string path;
  std::uint64_t bytes = 0;
};

struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string constant_convention;  // "codata" or "paper-calibrated"
  std::vector<OutputFile> outputs;
  std::optional<std::int64_t> timestamp;  // SOURCE_DATE_EPOCH if set
  std::string tool_version;
  std::vector<std::pair<std::string, std::string>> results;
  std::vector<std::string> notes;

  void add_parameter(std::string name, std::string value);
  void add_result(std::string name, std::string value);
  // Records path and on-disk size; the file must already exist.
  void add_output(const std::filesystem::path& path);
};

// Manifest pre-filled with the tool version and, when SOURCE_DATE_EPOCH is
// set in the environment, the timestamp.
RunManifest make_manifest(std::string command, std::string constant_convention);

std::string to_json(const RunManifest& manifest);

void write_manifest(const RunManifest& manifest,
                    const std::filesystem::path& path);

}  // namespace nulq
