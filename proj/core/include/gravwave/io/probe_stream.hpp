#pragma once

#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "gravwave/config.hpp"
#include "gravwave/probe.hpp"

namespace gravwave::io {

/// probes.bin holds 24-byte little-endian records (f64 time, f64 re, f64 im).
/// Records are sample-major: for each sample time, one record per probe in
/// the order listed by the probes.json sidecar.
struct ProbeStreamHeader {
  std::vector<Wavevector> modes;
  std::vector<double> k;
  std::vector<double> omega;
  ProbeFrame frame = ProbeFrame::interaction;
  ProbeVariable variable = ProbeVariable::normal;
  double sample_interval = 0.0;
  double t0 = 0.0;
  std::uint64_t samples = 0;
  std::string config_fingerprint;
};

inline constexpr const char* kProbeData = "probes.bin";
inline constexpr const char* kProbeSidecar = "probes.json";

ProbeStreamHeader make_probe_header(const ProbeSet& probes, double sample_interval, double t0,
                                    const std::string& fingerprint);

/// Buffers records and hands full blocks to a writer thread, so push() only
/// copies. close() (or destruction) drains the queue and rewrites the sidecar.
class ProbeStreamWriter {
 public:
  /// With keep_samples >= 0 an existing stream is truncated to that many
  /// samples and appended to; otherwise the files are replaced.
  ProbeStreamWriter(const std::filesystem::path& directory, ProbeStreamHeader header, std::int64_t keep_samples = -1);
  ~ProbeStreamWriter();
  ProbeStreamWriter(const ProbeStreamWriter&) = delete;
  ProbeStreamWriter& operator=(const ProbeStreamWriter&) = delete;

  void push(double time, std::span<const Complex> values);
  void close();
  std::uint64_t samples() const noexcept { return header_.samples; }

 private:
  void drain();
  void write_sidecar() const;

  std::filesystem::path directory_;
  ProbeStreamHeader header_;
  std::ofstream out_;
  std::vector<double> pending_;
  std::vector<std::vector<double>> queue_;
  std::mutex mutex_;
  std::condition_variable ready_;
  bool closing_ = false;
  bool closed_ = false;
  std::string error_;
  std::thread worker_;
};

ProbeStreamHeader read_probe_header(const std::filesystem::path& directory);
/// Loads every probe; the sample count is taken from the data file size.
std::vector<ModeProbe> read_probe_stream(const std::filesystem::path& directory);

}  // namespace gravwave::io
