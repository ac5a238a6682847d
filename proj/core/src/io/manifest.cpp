#include "gravwave/io/manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <memory>

#include <json.hpp>

#include "gravwave/errors.hpp"

namespace gravwave::io {
namespace {

using nlohmann::json;

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) throw IoError("SHA-256 unavailable");
  }
  void update(const void* data, std::size_t n) { EVP_DigestUpdate(ctx_.get(), data, n); }
  std::string hex() {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_.get(), md, &len);
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out += digits[md[i] >> 4];
      out += digits[md[i] & 15];
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  Sha256 h;
  h.update(bytes.data(), bytes.size());
  return h.hex();
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  Sha256 h;
  std::vector<char> buf(1 << 20);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    h.update(buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  return h.hex();
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void record_outputs(RunManifest& manifest, const std::filesystem::path& directory,
                    const std::vector<std::string>& relative_paths) {
  for (const auto& rel : relative_paths) {
    const auto path = directory / rel;
    manifest.outputs.push_back({rel, std::filesystem::file_size(path), sha256_file(path)});
  }
}

void write_manifest(const std::filesystem::path& path, const RunManifest& m) {
  json outputs = json::array();
  for (const auto& o : m.outputs) outputs.push_back({{"path", o.path}, {"bytes", o.bytes}, {"sha256", o.sha256}});
  const json doc = {{"format", "gravwave-run"},
                    {"version", 1},
                    {"code_version", m.code_version},
                    {"seed", m.seed},
                    {"config", m.config_text},
                    {"started", m.started},
                    {"finished", m.finished},
                    {"start_time", m.start_time},
                    {"end_time", m.end_time},
                    {"start_step", m.start_step},
                    {"end_step", m.end_step},
                    {"resumed_from", m.resumed_from},
                    {"checkpoints", m.checkpoints},
                    {"outputs", outputs}};
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write manifest " + path.string());
  out << doc.dump(2) << '\n';
}

RunManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path.string());
  try {
    json doc;
    in >> doc;
    RunManifest m;
    m.code_version = doc.at("code_version");
    m.seed = doc.at("seed");
    m.config_text = doc.at("config");
    m.started = doc.at("started");
    m.finished = doc.at("finished");
    m.start_time = doc.at("start_time");
    m.end_time = doc.at("end_time");
    m.start_step = doc.at("start_step");
    m.end_step = doc.at("end_step");
    m.resumed_from = doc.at("resumed_from");
    m.checkpoints = doc.at("checkpoints").get<std::vector<std::string>>();
    for (const auto& o : doc.at("outputs")) m.outputs.push_back({o.at("path"), o.at("bytes"), o.at("sha256")});
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed manifest " + path.string() + ": " + e.what());
  }
}

}  // namespace gravwave::io
