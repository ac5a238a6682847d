#pragma once

#include <filesystem>

#include "gravwave/config.hpp"
#include "gravwave/state.hpp"

namespace gravwave::io {

/// Binary checkpoint, all values little-endian:
///
///   offset  size  field
///        0     8  magic "GWCKPT01"
///        8     4  u32 format version (1)
///       12     4  u32 n_x
///       16     4  u32 n_y
///       20     4  u32 reserved (0)
///       24     8  f64 box_length
///       32     8  f64 dealias_fraction
///       40     8  f64 g
///       48     8  f64 epsilon
///       56     8  f64 dt
///       64     8  f64 time
///       72     8  u64 seed
///       80     8  i64 step
///       88     8  u64 length of the embedded config text (bytes)
///       96     L  config text (serialize_config)
///     96+L  16*N  eta: N = n_x*n_y complex values (re, im) in storage order
///               16*N  psi: same layout
struct Checkpoint {
  SimConfig config;
  SurfaceState state;
};

void write_checkpoint(const std::filesystem::path& path, const SimConfig& config, const SurfaceState& state);
/// Throws IoError on truncation or a bad header.
Checkpoint read_checkpoint(const std::filesystem::path& path);

}  // namespace gravwave::io
