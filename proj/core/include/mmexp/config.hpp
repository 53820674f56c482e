#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mmexp/experiment.hpp"

namespace mmexp {

/// Flat `key = value` settings. `#` starts a comment, blank lines are
/// skipped, values may be wrapped in double quotes.
struct ConfigEntry {
  std::string value;
  int line = 0;
};

using ConfigMap = std::map<std::string, ConfigEntry>;

/// Throws ConfigError with the offending line number.
ConfigMap parse_config(std::string_view text);
/// Throws IoError if the file cannot be read.
ConfigMap load_config(const std::filesystem::path& path);

/// Comma separated list, whitespace trimmed, empty items rejected.
std::vector<std::string> split_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);
/// "a,b" -> {a, b}.
std::pair<double, double> parse_interval(std::string_view text);

/// Recognised keys: function, kernel, n, interval, grid, operators,
/// range_policy, extension, quadrature, quadrature_points, measure.
/// Keys in `ignored` are skipped; anything else is a ConfigError.
void apply_config(Experiment& exp, const ConfigMap& config, const std::vector<std::string>& ignored = {});

}  // namespace mmexp
