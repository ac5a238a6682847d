#include "gravwave/io/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "gravwave/errors.hpp"
#include "gravwave/io/config_file.hpp"

static_assert(std::endian::native == std::endian::little, "checkpoint I/O assumes a little-endian host");

namespace gravwave::io {
namespace {

constexpr char kMagic[8] = {'G', 'W', 'C', 'K', 'P', 'T', '0', '1'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ofstream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::ifstream& in, const std::filesystem::path& path) {
  T v{};
  if (!in.read(reinterpret_cast<char*>(&v), sizeof v)) throw IoError("truncated checkpoint " + path.string());
  return v;
}

}  // namespace

void write_checkpoint(const std::filesystem::path& path, const SimConfig& config, const SurfaceState& state) {
  const SpectralGrid& grid = state.eta.grid();
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write checkpoint " + tmp.string());
    out.write(kMagic, sizeof kMagic);
    put<std::uint32_t>(out, kVersion);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.nx()));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.ny()));
    put<std::uint32_t>(out, 0);
    put<double>(out, grid.box_length());
    put<double>(out, grid.dealias_fraction());
    put<double>(out, config.g);
    put<double>(out, config.epsilon);
    put<double>(out, config.time_step());
    put<double>(out, state.time);
    put<std::uint64_t>(out, config.seed);
    put<std::int64_t>(out, state.step);
    const std::string text = serialize_config(config);
    put<std::uint64_t>(out, text.size());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    for (const SpectralField* f : {&state.eta, &state.psi}) {
      const auto c = f->coefficients();
      out.write(reinterpret_cast<const char*>(c.data()), static_cast<std::streamsize>(c.size() * sizeof(Complex)));
    }
    if (!out.flush()) throw IoError("failed writing checkpoint " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move checkpoint into place at " + path.string() + ": " + ec.message());
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open checkpoint " + path.string());
  char magic[8];
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof magic) != 0) {
    throw IoError("not a gravwave checkpoint: " + path.string());
  }
  if (get<std::uint32_t>(in, path) != kVersion) throw IoError("unsupported checkpoint version in " + path.string());
  const auto nx = get<std::uint32_t>(in, path);
  const auto ny = get<std::uint32_t>(in, path);
  get<std::uint32_t>(in, path);
  const auto box_length = get<double>(in, path);
  const auto dealias = get<double>(in, path);
  get<double>(in, path);  // g, epsilon and dt are also in the config text
  get<double>(in, path);
  get<double>(in, path);
  const auto time = get<double>(in, path);
  get<std::uint64_t>(in, path);
  const auto step = get<std::int64_t>(in, path);
  const auto text_size = get<std::uint64_t>(in, path);
  if (text_size > (1u << 24)) throw IoError("corrupt config length in " + path.string());
  std::string text(text_size, '\0');
  if (!in.read(text.data(), static_cast<std::streamsize>(text_size))) throw IoError("truncated checkpoint " + path.string());

  Checkpoint out;
  out.config = parse_config(text);
  if (out.config.grid.n_x != static_cast<int>(nx) || out.config.grid.n_y != static_cast<int>(ny) ||
      out.config.grid.box_length != box_length || out.config.grid.dealias_fraction != dealias) {
    throw IoError("checkpoint header disagrees with its embedded config: " + path.string());
  }
  const GridPtr grid = out.config.make_grid();
  out.state = SurfaceState::zero(grid);
  out.state.time = time;
  out.state.step = step;
  for (SpectralField* f : {&out.state.eta, &out.state.psi}) {
    auto c = f->coefficients();
    if (!in.read(reinterpret_cast<char*>(c.data()), static_cast<std::streamsize>(c.size() * sizeof(Complex)))) {
      throw IoError("truncated checkpoint " + path.string());
    }
  }
  if (in.peek() != std::char_traits<char>::eof()) throw IoError("trailing bytes in checkpoint " + path.string());
  return out;
}

}  // namespace gravwave::io
