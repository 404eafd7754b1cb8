#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quadgait/scenario.hpp"

namespace quadgait {

class ConfigError : public std::runtime_error {
public:
  enum class Kind { MissingFile, Parse, Validation };

  ConfigError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

struct Config {
  RobotModel model;
  GaitParams params;
  bool stroke_set{false};  ///< otherwise stroke = 2 W beta
  int stair_count{6};
  double dt{0.001};
  int level_cycles{2};
  double spin_target_deg{90.0};
  SpinDirection spin_direction{SpinDirection::Ccw};
  std::string out_dir{"out"};

  /// Gait parameters with the stroke default applied.
  GaitParams gait() const;
  ScenarioSettings scenario() const;
};

/// Table I robot and gait.
Config default_config();

/// Applies one `key = value` setting. Throws ConfigError (Parse) for unknown
/// keys and malformed values.
void apply_setting(Config& config, std::string_view key, std::string_view value);
/// Parses `key=value` as given on the command line.
void apply_override(Config& config, std::string_view assignment);

/// Parses config text on top of `base`. Blank lines and `#` comments are
/// ignored; a text without any setting is a parse error.
Config parse_config(std::string_view text, Config base = default_config());
Config load_config(const std::filesystem::path& path);
/// Loads `path`, applies `key=value` overrides, then validates.
Config load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides);

/// Throws ConfigError (Validation) naming the offending key.
void validate_config(const Config& config);

}  // namespace quadgait
