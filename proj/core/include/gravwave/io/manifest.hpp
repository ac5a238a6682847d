#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gravwave/config.hpp"

namespace gravwave::io {

std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

/// UTC timestamp, e.g. 2024-05-01T12:00:00Z.
std::string utc_now();

struct OutputRecord {
  std::string path;
  std::uint64_t bytes = 0;
  std::string sha256;
};

/// run.json: config snapshot, code version, seed, timing, checkpoints and a
/// digest of every output file. Paths are relative to the output directory.
struct RunManifest {
  std::string config_text;
  std::string code_version;
  std::uint64_t seed = 0;
  std::string started;
  std::string finished;
  double start_time = 0.0;
  double end_time = 0.0;
  std::int64_t start_step = 0;
  std::int64_t end_step = 0;
  std::string resumed_from;
  std::vector<std::string> checkpoints;
  std::vector<OutputRecord> outputs;
};

/// Digests every listed file under `directory` into manifest.outputs.
void record_outputs(RunManifest& manifest, const std::filesystem::path& directory,
                    const std::vector<std::string>& relative_paths);
void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);
RunManifest read_manifest(const std::filesystem::path& path);

}  // namespace gravwave::io
