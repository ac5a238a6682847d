#pragma once

#include <stdexcept>
#include <string>

#include "gravwave/grid.hpp"

namespace gravwave {

/// Invalid parameters, mismatched dimensions, malformed config documents.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
  ConfigError(const std::string& key_path, int line, const std::string& what)
      : std::runtime_error(key_path + (line > 0 ? " (line " + std::to_string(line) + ")" : std::string()) +
                           ": " + what),
        key_path_(key_path),
        line_(line) {}

  const std::string& key_path() const noexcept { return key_path_; }
  int line() const noexcept { return line_; }

 private:
  std::string key_path_;
  int line_ = 0;
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// A non-finite value appeared in a tendency or in the state.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(Wavevector where, double time)
      : std::runtime_error("non-finite value at k=(" + std::to_string(where.x) + "," + std::to_string(where.y) +
                           ") t=" + std::to_string(time)),
        where_(where),
        time_(time) {}

  Wavevector where() const noexcept { return where_; }
  double time() const noexcept { return time_; }

 private:
  Wavevector where_;
  double time_;
};

/// The embedded RK error estimate exceeded the configured abort threshold.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(double estimate, double threshold, double time)
      : std::runtime_error("step error estimate " + std::to_string(estimate) + " exceeds " +
                           std::to_string(threshold) + " at t=" + std::to_string(time)),
        estimate_(estimate) {}

  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// An estimator was given too little or degenerate data.
class AnalysisError : public std::runtime_error {
 public:
  explicit AnalysisError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gravwave
