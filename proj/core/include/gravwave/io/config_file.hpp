#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gravwave/config.hpp"

namespace gravwave::io {

/// INI-style document with sections [grid], [physics], [drive], [probes] and
/// [output]; `#` and `;` start comments. Missing keys keep their defaults,
/// unknown sections or keys are errors, and every error carries the key path
/// (e.g. `grid.n_x`) and line number. The result is validated.
///
///   [probes]
///   modes = (17,0) (25,0)
///   rings = 13:17 33:37
SimConfig parse_config(std::string_view text);
SimConfig load_config(const std::filesystem::path& path);

/// Writes every key at full precision; parse_config(serialize_config(c)) == c.
std::string serialize_config(const SimConfig& config);

/// First 16 hex digits of the SHA-256 of serialize_config(config).
std::string config_fingerprint(const SimConfig& config);

}  // namespace gravwave::io
