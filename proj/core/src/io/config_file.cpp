#include "gravwave/io/config_file.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "gravwave/errors.hpp"
#include "gravwave/io/manifest.hpp"

namespace gravwave::io {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Context {
  std::string path;
  int line;
  [[noreturn]] void fail(const std::string& what) const { throw ConfigError(path, line, what); }
};

double parse_double(const std::string& v, const Context& ctx) {
  double out = 0.0;
  const std::string_view s(v);
  if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size() || std::isnan(out)) ctx.fail("expected a number, got '" + v + "'");
  return out;
}

template <class Int>
Int parse_int(const std::string& v, const Context& ctx) {
  Int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) ctx.fail("expected an integer, got '" + v + "'");
  return out;
}

bool parse_bool(const std::string& v, const Context& ctx) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  ctx.fail("expected true or false, got '" + v + "'");
}

std::vector<Wavevector> parse_modes(const std::string& v, const Context& ctx) {
  std::vector<Wavevector> out;
  std::string compact;
  for (char c : v) {
    if (c != ' ' && c != '\t') compact += c;
  }
  std::size_t pos = 0;
  while (pos < compact.size()) {
    if (compact[pos] != '(') ctx.fail("expected '(x,y)' entries, got '" + v + "'");
    const auto comma = compact.find(',', pos);
    const auto close = compact.find(')', pos);
    if (comma == std::string::npos || close == std::string::npos || comma > close) {
      ctx.fail("expected '(x,y)' entries, got '" + v + "'");
    }
    out.push_back({parse_int<std::int64_t>(compact.substr(pos + 1, comma - pos - 1), ctx),
                   parse_int<std::int64_t>(compact.substr(comma + 1, close - comma - 1), ctx)});
    pos = close + 1;
  }
  return out;
}

std::vector<Ring> parse_rings(const std::string& v, const Context& ctx) {
  std::vector<Ring> out;
  for (const auto& tok : split_ws(v)) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) ctx.fail("expected 'k_min:k_max' entries, got '" + tok + "'");
    out.push_back({parse_double(tok.substr(0, colon), ctx), parse_double(tok.substr(colon + 1), ctx)});
  }
  return out;
}

struct Field {
  std::function<void(SimConfig&, const std::string&, const Context&)> read;
  std::function<std::string(const SimConfig&)> write;
};

template <class Member>
Field double_field(Member member) {
  return {[member](SimConfig& c, const std::string& v, const Context& ctx) { member(c) = parse_double(v, ctx); },
          [member](const SimConfig& c) { return format_double(member(const_cast<SimConfig&>(c))); }};
}

using Schema = std::map<std::string, std::map<std::string, Field>>;

const Schema& schema() {
  static const Schema s = [] {
    Schema s;
    auto& grid = s["grid"];
    grid["n_x"] = {[](SimConfig& c, const std::string& v, const Context& ctx) { c.grid.n_x = parse_int<int>(v, ctx); },
                   [](const SimConfig& c) { return std::to_string(c.grid.n_x); }};
    grid["n_y"] = {[](SimConfig& c, const std::string& v, const Context& ctx) { c.grid.n_y = parse_int<int>(v, ctx); },
                   [](const SimConfig& c) { return std::to_string(c.grid.n_y); }};
    grid["box_length"] = double_field([](SimConfig& c) -> double& { return c.grid.box_length; });
    grid["dealias_fraction"] = double_field([](SimConfig& c) -> double& { return c.grid.dealias_fraction; });

    auto& physics = s["physics"];
    physics["g"] = double_field([](SimConfig& c) -> double& { return c.g; });
    physics["epsilon"] = double_field([](SimConfig& c) -> double& { return c.epsilon; });
    physics["dt"] = double_field([](SimConfig& c) -> double& { return c.dt; });
    physics["steps_per_period"] = double_field([](SimConfig& c) -> double& { return c.steps_per_period; });
    physics["error_abort_threshold"] = double_field([](SimConfig& c) -> double& { return c.error_abort_threshold; });
    physics["seed"] = {
        [](SimConfig& c, const std::string& v, const Context& ctx) { c.seed = parse_int<std::uint64_t>(v, ctx); },
        [](const SimConfig& c) { return std::to_string(c.seed); }};

    auto& drive = s["drive"];
    drive["k_low"] = double_field([](SimConfig& c) -> double& { return c.drive.k_low; });
    drive["k_high"] = double_field([](SimConfig& c) -> double& { return c.drive.k_high; });
    drive["amplitude_prefactor"] = double_field([](SimConfig& c) -> double& { return c.drive.amplitude_prefactor; });
    drive["eta_exponent"] = double_field([](SimConfig& c) -> double& { return c.drive.eta_exponent; });
    drive["psi_exponent"] = double_field([](SimConfig& c) -> double& { return c.drive.psi_exponent; });
    drive["damping_low_coeff"] = double_field([](SimConfig& c) -> double& { return c.drive.damping.low_coeff; });
    drive["damping_low_threshold"] = double_field([](SimConfig& c) -> double& { return c.drive.damping.low_threshold; });
    drive["damping_low_exponent"] = double_field([](SimConfig& c) -> double& { return c.drive.damping.low_exponent; });
    drive["damping_high_coeff"] = double_field([](SimConfig& c) -> double& { return c.drive.damping.high_coeff; });
    drive["damping_high_threshold"] =
        double_field([](SimConfig& c) -> double& { return c.drive.damping.high_threshold; });
    drive["damping_high_exponent"] =
        double_field([](SimConfig& c) -> double& { return c.drive.damping.high_exponent; });
    drive["forcing_mode"] = {
        [](SimConfig& c, const std::string& v, const Context& ctx) {
          if (v == "clamp") {
            c.drive.forcing_mode = ForcingMode::clamp_modulus;
          } else if (v == "rerandomize") {
            c.drive.forcing_mode = ForcingMode::rerandomize_phase;
          } else {
            ctx.fail("expected clamp or rerandomize, got '" + v + "'");
          }
        },
        [](const SimConfig& c) {
          return std::string(c.drive.forcing_mode == ForcingMode::clamp_modulus ? "clamp" : "rerandomize");
        }};
    drive["forcing_enabled"] = {
        [](SimConfig& c, const std::string& v, const Context& ctx) { c.drive.forcing_enabled = parse_bool(v, ctx); },
        [](const SimConfig& c) { return std::string(c.drive.forcing_enabled ? "true" : "false"); }};
    drive["damping_enabled"] = {
        [](SimConfig& c, const std::string& v, const Context& ctx) { c.drive.damping_enabled = parse_bool(v, ctx); },
        [](const SimConfig& c) { return std::string(c.drive.damping_enabled ? "true" : "false"); }};

    auto& probes = s["probes"];
    probes["modes"] = {[](SimConfig& c, const std::string& v, const Context& ctx) { c.probes.modes = parse_modes(v, ctx); },
                       [](const SimConfig& c) {
                         std::string out;
                         for (const auto& m : c.probes.modes) {
                           if (!out.empty()) out += ' ';
                           out += "(" + std::to_string(m.x) + "," + std::to_string(m.y) + ")";
                         }
                         return out;
                       }};
    probes["rings"] = {[](SimConfig& c, const std::string& v, const Context& ctx) { c.probes.rings = parse_rings(v, ctx); },
                       [](const SimConfig& c) {
                         std::string out;
                         for (const auto& r : c.probes.rings) {
                           if (!out.empty()) out += ' ';
                           out += format_double(r.k_min) + ":" + format_double(r.k_max);
                         }
                         return out;
                       }};
    probes["variable"] = {
        [](SimConfig& c, const std::string& v, const Context& ctx) {
          if (v == "normal") {
            c.probes.variable = ProbeVariable::normal;
          } else if (v == "eta") {
            c.probes.variable = ProbeVariable::eta;
          } else {
            ctx.fail("expected normal or eta, got '" + v + "'");
          }
        },
        [](const SimConfig& c) { return std::string(c.probes.variable == ProbeVariable::normal ? "normal" : "eta"); }};
    probes["sample_every"] = {
        [](SimConfig& c, const std::string& v, const Context& ctx) { c.probes.sample_every = parse_int<int>(v, ctx); },
        [](const SimConfig& c) { return std::to_string(c.probes.sample_every); }};

    auto& output = s["output"];
    output["directory"] = {[](SimConfig& c, const std::string& v, const Context&) { c.output.directory = v; },
                           [](const SimConfig& c) { return c.output.directory; }};
    output["checkpoint_every_periods"] =
        double_field([](SimConfig& c) -> double& { return c.output.checkpoint_every_periods; });
    output["reference_k"] = double_field([](SimConfig& c) -> double& { return c.output.reference_k; });
    return s;
  }();
  return s;
}

}  // namespace

SimConfig parse_config(std::string_view text) {
  SimConfig config;
  std::map<std::string, int> lines;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto comment = raw.find_first_of("#;");
    const std::string line = trim(raw.substr(0, comment));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(line, line_no, "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!schema().contains(section)) throw ConfigError(section, line_no, "unknown section");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(section, line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string path = section.empty() ? key : section + "." + key;
    if (section.empty()) throw ConfigError(path, line_no, "key outside of any section");
    const auto& fields = schema().at(section);
    const auto field = fields.find(key);
    if (field == fields.end()) throw ConfigError(path, line_no, "unknown key");
    if (lines.contains(path)) throw ConfigError(path, line_no, "duplicate key (first set on line " +
                                                                   std::to_string(lines[path]) + ")");
    lines[path] = line_no;
    field->second.read(config, value, Context{path, line_no});
  }
  try {
    config.validate();
  } catch (const ConfigError& e) {
    const auto it = lines.find(e.key_path());
    if (it == lines.end()) throw;
    const std::string what = e.what();
    const auto colon = what.find(": ");
    throw ConfigError(e.key_path(), it->second, colon == std::string::npos ? what : what.substr(colon + 2));
  }
  return config;
}

SimConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(const SimConfig& config) {
  std::string out;
  for (const char* section : {"grid", "physics", "drive", "probes", "output"}) {
    if (!out.empty()) out += '\n';
    out += "[" + std::string(section) + "]\n";
    for (const auto& [key, field] : schema().at(section)) out += key + " = " + field.write(config) + "\n";
  }
  return out;
}

std::string config_fingerprint(const SimConfig& config) { return sha256_hex(serialize_config(config)).substr(0, 16); }

}  // namespace gravwave::io
