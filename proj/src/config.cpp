#include "quadgait/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace quadgait {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(const std::string& msg) { throw ConfigError(ConfigError::Kind::Parse, msg); }

double to_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    parse_error(std::string(key) + ": expected a number, got '" + std::string(v) + "'");
  }
  return out;
}

int to_int(std::string_view key, std::string_view v) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    parse_error(std::string(key) + ": expected an integer, got '" + std::string(v) + "'");
  }
  return out;
}

[[noreturn]] void invalid(const std::string& key, const std::string& msg) {
  throw ConfigError(ConfigError::Kind::Validation, key + ": " + msg);
}

}  // namespace

GaitParams Config::gait() const {
  GaitParams p = params;
  if (!stroke_set) p.stroke = 2.0 * p.stair_width * p.beta;
  return p;
}

ScenarioSettings Config::scenario() const {
  ScenarioSettings s;
  s.model = model;
  s.params = gait();
  s.stair_count = stair_count;
  s.level_cycles = level_cycles;
  s.spin_target = spin_target_deg * std::numbers::pi / 180.0;
  s.spin_direction = spin_direction;
  return s;
}

Config default_config() { return Config{}; }

void apply_setting(Config& c, std::string_view key, std::string_view value) {
  const std::string k(key);
  if (key == "p_x") c.model.p_x = to_double(key, value);
  else if (key == "p_y") c.model.p_y = to_double(key, value);
  else if (key == "r_x") c.model.r_x = to_double(key, value);
  else if (key == "r_y") c.model.r_y = to_double(key, value);
  else if (key == "r_z") c.model.r_z = to_double(key, value);
  else if (key == "body_height") c.model.body_height = to_double(key, value);
  else if (key == "beta") c.params.beta = to_double(key, value);
  else if (key == "cycle_time") c.params.cycle_time = to_double(key, value);
  else if (key == "stroke") {
    c.params.stroke = to_double(key, value);
    c.stroke_set = true;
  }
  else if (key == "delta_h") c.params.delta_h = to_double(key, value);
  else if (key == "stair_width") c.params.stair_width = to_double(key, value);
  else if (key == "stair_height") c.params.stair_height = to_double(key, value);
  else if (key == "stair_count") c.stair_count = to_int(key, value);
  else if (key == "t_0") c.params.t_0 = to_double(key, value);
  else if (key == "dt") c.dt = to_double(key, value);
  else if (key == "level_cycles") c.level_cycles = to_int(key, value);
  else if (key == "spin_target_deg") c.spin_target_deg = to_double(key, value);
  else if (key == "spin_direction") {
    if (value == "ccw") c.spin_direction = SpinDirection::Ccw;
    else if (value == "cw") c.spin_direction = SpinDirection::Cw;
    else parse_error("spin_direction: expected ccw or cw, got '" + std::string(value) + "'");
  }
  else if (key == "out_dir") {
    if (value.empty()) parse_error("out_dir: empty path");
    c.out_dir = std::string(value);
  }
  else parse_error("unknown key '" + k + "'");
}

void apply_override(Config& config, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) parse_error("override '" + std::string(assignment) + "' is not key=value");
  apply_setting(config, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

Config parse_config(std::string_view text, Config base) {
  Config c = std::move(base);
  int settings = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_error("line " + std::to_string(line_no) + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) parse_error("line " + std::to_string(line_no) + ": expected key = value");
    try {
      apply_setting(c, key, value);
    } catch (const ConfigError& e) {
      parse_error("line " + std::to_string(line_no) + ": " + e.what());
    }
    ++settings;
  }
  if (settings == 0) parse_error("config contains no settings");
  return c;
}

Config load_config(const std::filesystem::path& path) { return load_config(path, {}); }

Config load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in || std::filesystem::is_directory(path)) {
    throw ConfigError(ConfigError::Kind::MissingFile, "cannot open config " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  Config c = parse_config(buf.str());
  for (const auto& o : overrides) apply_override(c, o);
  validate_config(c);
  return c;
}

void validate_config(const Config& c) {
  const struct {
    const char* key;
    double value;
  } lengths[] = {{"p_x", c.model.p_x}, {"p_y", c.model.p_y}, {"r_x", c.model.r_x}, {"r_y", c.model.r_y},
                 {"r_z", c.model.r_z}, {"body_height", c.model.body_height}};
  for (const auto& l : lengths) {
    if (!(l.value > 0.0)) invalid(l.key, "must be positive");
  }
  if (!(c.model.r_y < c.model.p_y)) invalid("r_y", "must be smaller than p_y");
  if (!(c.model.r_x < c.model.p_x)) invalid("r_x", "must be smaller than p_x");
  if (!(c.params.beta >= 0.75 && c.params.beta < 1.0)) invalid("beta", "must lie in [3/4, 1)");
  if (!(c.params.cycle_time > 0.0)) invalid("cycle_time", "must be positive");
  if (c.stroke_set && !(c.params.stroke > 0.0)) invalid("stroke", "must be positive");
  if (!(c.params.delta_h > 0.0)) invalid("delta_h", "must be positive");
  if (!(c.params.stair_width > 0.0)) invalid("stair_width", "must be positive");
  if (!(c.params.stair_height > 0.0)) invalid("stair_height", "must be positive");
  if (c.stair_count < 1) invalid("stair_count", "must be at least 1");
  if (!(c.dt > 0.0)) invalid("dt", "must be positive");
  if (c.level_cycles < 0) invalid("level_cycles", "must not be negative");
  if (!(c.spin_target_deg > 0.0)) invalid("spin_target_deg", "must be positive");
  if (c.out_dir.empty()) invalid("out_dir", "must not be empty");
}

}  // namespace quadgait
