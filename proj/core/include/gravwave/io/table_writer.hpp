#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace gravwave::io {

/// CSV with a self-describing preamble:
///
///   # quantity: waveaction spectrum
///   # units: k in 2*pi/L, n in |b|^2
///   # config: 3f0c9a1b2d4e5f60
///   k_center,k_mean,modes,n,compensated
///   ...
///
/// An empty path writes to standard output.
class TableWriter {
 public:
  TableWriter(const std::filesystem::path& path, const std::string& quantity, const std::string& units,
              const std::string& fingerprint, const std::vector<std::string>& columns);

  /// Numbers are written with 17 significant digits; NaN marks an absent value.
  void row(std::initializer_list<double> values);
  void row(const std::vector<double>& values);
  void close();

 private:
  std::ofstream file_;
  std::ostream* out_;
  std::size_t columns_;
};

/// JSON-lines output with a first line describing the records.
class JsonLinesWriter {
 public:
  JsonLinesWriter(const std::filesystem::path& path, const std::string& quantity, const std::string& fingerprint);
  /// `record` must be a serialized JSON object on one line.
  void write(const std::string& record);
  void close();

 private:
  std::ofstream out_;
};

}  // namespace gravwave::io
