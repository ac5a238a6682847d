#include "gravwave/io/probe_stream.hpp"

#include <json.hpp>

#include "gravwave/errors.hpp"

namespace gravwave::io {
namespace {

using nlohmann::json;

constexpr std::size_t kBlockRecords = 1 << 14;

}  // namespace

ProbeStreamHeader make_probe_header(const ProbeSet& probes, double sample_interval, double t0,
                                    const std::string& fingerprint) {
  ProbeStreamHeader h;
  h.modes.assign(probes.modes().begin(), probes.modes().end());
  h.k.assign(probes.wavenumbers().begin(), probes.wavenumbers().end());
  h.omega.assign(probes.omegas().begin(), probes.omegas().end());
  h.frame = probes.frame();
  h.variable = probes.variable();
  h.sample_interval = sample_interval;
  h.t0 = t0;
  h.config_fingerprint = fingerprint;
  return h;
}

ProbeStreamWriter::ProbeStreamWriter(const std::filesystem::path& directory, ProbeStreamHeader header,
                                     std::int64_t keep_samples)
    : directory_(directory), header_(std::move(header)) {
  std::filesystem::create_directories(directory_);
  const auto data = directory_ / kProbeData;
  const std::uint64_t record_set = 24 * header_.modes.size();
  if (keep_samples >= 0 && std::filesystem::exists(data)) {
    const ProbeStreamHeader previous = read_probe_header(directory_);
    if (previous.modes != header_.modes) throw IoError("probe list differs from the existing stream in " + directory_.string());
    const std::uint64_t have = record_set == 0 ? 0 : std::filesystem::file_size(data) / record_set;
    const auto keep = std::min<std::uint64_t>(have, static_cast<std::uint64_t>(keep_samples));
    std::filesystem::resize_file(data, keep * record_set);
    header_.t0 = previous.t0;
    header_.samples = keep;
    out_.open(data, std::ios::binary | std::ios::app);
  } else {
    header_.samples = 0;
    out_.open(data, std::ios::binary | std::ios::trunc);
  }
  if (!out_) throw IoError("cannot open probe stream " + data.string());
  write_sidecar();
  worker_ = std::thread([this] { drain(); });
}

ProbeStreamWriter::~ProbeStreamWriter() {
  try {
    close();
  } catch (...) {
  }
}

void ProbeStreamWriter::push(double time, std::span<const Complex> values) {
  if (values.size() != header_.modes.size()) throw IoError("probe record has the wrong number of values");
  if (header_.samples == 0) header_.t0 = time;
  for (Complex v : values) {
    pending_.push_back(time);
    pending_.push_back(v.real());
    pending_.push_back(v.imag());
  }
  ++header_.samples;
  if (pending_.size() >= 3 * kBlockRecords) {
    std::lock_guard lock(mutex_);
    queue_.push_back(std::move(pending_));
    pending_.clear();
    ready_.notify_one();
  }
}

void ProbeStreamWriter::drain() {
  std::unique_lock lock(mutex_);
  for (;;) {
    ready_.wait(lock, [this] { return closing_ || !queue_.empty(); });
    while (!queue_.empty()) {
      std::vector<double> block = std::move(queue_.front());
      queue_.erase(queue_.begin());
      lock.unlock();
      out_.write(reinterpret_cast<const char*>(block.data()), static_cast<std::streamsize>(block.size() * sizeof(double)));
      lock.lock();
      if (!out_ && error_.empty()) error_ = "write to probe stream failed";
    }
    if (closing_) return;
  }
}

void ProbeStreamWriter::close() {
  if (closed_) return;
  closed_ = true;
  {
    std::lock_guard lock(mutex_);
    if (!pending_.empty()) queue_.push_back(std::move(pending_));
    pending_.clear();
    closing_ = true;
    ready_.notify_one();
  }
  worker_.join();
  out_.close();
  if (!error_.empty()) throw IoError(error_);
  write_sidecar();
}

void ProbeStreamWriter::write_sidecar() const {
  json probes = json::array();
  for (std::size_t i = 0; i < header_.modes.size(); ++i) {
    probes.push_back({{"index", i},
                      {"k", {header_.modes[i].x, header_.modes[i].y}},
                      {"k_magnitude", header_.k[i]},
                      {"omega", header_.omega[i]}});
  }
  const json doc = {{"format", "gravwave-probes"},
                    {"version", 1},
                    {"data", kProbeData},
                    {"record_bytes", 24},
                    {"record", {"time:f64", "re:f64", "im:f64"}},
                    {"byte_order", "little"},
                    {"layout", "sample-major; one record per probe per sample, in probe order"},
                    {"frame", header_.frame == ProbeFrame::interaction ? "interaction" : "lab"},
                    {"variable", header_.variable == ProbeVariable::normal ? "normal" : "eta"},
                    {"sample_interval", header_.sample_interval},
                    {"t0", header_.t0},
                    {"samples", header_.samples},
                    {"config_fingerprint", header_.config_fingerprint},
                    {"probes", probes}};
  const auto path = directory_ / kProbeSidecar;
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

ProbeStreamHeader read_probe_header(const std::filesystem::path& directory) {
  const auto path = directory / kProbeSidecar;
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  json doc;
  try {
    in >> doc;
    ProbeStreamHeader h;
    if (doc.at("format") != "gravwave-probes") throw IoError("not a probe sidecar: " + path.string());
    h.frame = doc.at("frame") == "interaction" ? ProbeFrame::interaction : ProbeFrame::lab;
    h.variable = doc.at("variable") == "normal" ? ProbeVariable::normal : ProbeVariable::eta;
    h.sample_interval = doc.at("sample_interval").get<double>();
    h.t0 = doc.at("t0").get<double>();
    h.samples = doc.at("samples").get<std::uint64_t>();
    h.config_fingerprint = doc.value("config_fingerprint", "");
    for (const auto& p : doc.at("probes")) {
      h.modes.push_back({p.at("k").at(0).get<std::int64_t>(), p.at("k").at(1).get<std::int64_t>()});
      h.k.push_back(p.at("k_magnitude").get<double>());
      h.omega.push_back(p.at("omega").get<double>());
    }
    return h;
  } catch (const json::exception& e) {
    throw IoError("malformed probe sidecar " + path.string() + ": " + e.what());
  }
}

std::vector<ModeProbe> read_probe_stream(const std::filesystem::path& directory) {
  const ProbeStreamHeader h = read_probe_header(directory);
  const auto data = directory / kProbeData;
  std::ifstream in(data, std::ios::binary);
  if (!in) throw IoError("cannot open " + data.string());
  const std::size_t p = h.modes.size();
  std::vector<ModeProbe> out(p);
  for (std::size_t i = 0; i < p; ++i) {
    out[i].wavevector = h.modes[i];
    out[i].k = h.k[i];
    out[i].omega = h.omega[i];
    out[i].t0 = h.t0;
    out[i].sample_interval = h.sample_interval;
    out[i].frame = h.frame;
  }
  if (p == 0) return out;
  const std::uint64_t samples = std::filesystem::file_size(data) / (24 * p);
  std::vector<double> row(3 * p);
  for (auto& probe : out) probe.samples.reserve(samples);
  for (std::uint64_t s = 0; s < samples; ++s) {
    if (!in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row.size() * sizeof(double)))) {
      throw IoError("truncated probe stream " + data.string());
    }
    for (std::size_t i = 0; i < p; ++i) out[i].samples.emplace_back(row[3 * i + 1], row[3 * i + 2]);
  }
  return out;
}

}  // namespace gravwave::io
