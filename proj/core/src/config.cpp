#include "mmexp/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <tuple>
#include <fstream>
#include <sstream>

#include "mmexp/error.hpp"

namespace mmexp {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

double to_double(std::string_view text, std::string_view what) {
  const std::string s(trim(text));
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw ConfigError("bad number for " + std::string(what) + ": '" + s + "'");
  return v;
}

int to_int(std::string_view text, std::string_view what) {
  const auto s = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("bad integer for " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

ConfigMap parse_config(std::string_view text) {
  ConfigMap out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail_at(line_no, "expected key = value");
    const auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (key.empty()) fail_at(line_no, "missing key");
    if (!std::all_of(key.begin(), key.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; })) {
      fail_at(line_no, "invalid key '" + std::string(key) + "'");
    }
    if (!value.empty() && value.front() == '"') {
      if (value.size() < 2 || value.back() != '"') fail_at(line_no, "unterminated string");
      value = value.substr(1, value.size() - 2);
    }
    if (value.empty()) fail_at(line_no, "missing value for '" + std::string(key) + "'");
    std::string k(key);
    std::replace(k.begin(), k.end(), '-', '_');
    if (out.count(k)) fail_at(line_no, "duplicate key '" + k + "'");
    out.emplace(std::move(k), ConfigEntry{std::string(value), line_no});
  }
  return out;
}

ConfigMap load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (item.empty()) throw ConfigError("empty item in list '" + std::string(text) + "'");
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) out.push_back(to_int(item, "n"));
  return out;
}

std::pair<double, double> parse_interval(std::string_view text) {
  const auto parts = split_list(text);
  if (parts.size() != 2) throw ConfigError("interval must be 'a,b', got '" + std::string(text) + "'");
  const double a = to_double(parts[0], "interval");
  const double b = to_double(parts[1], "interval");
  if (!(a > 0.0) || !(b > a)) throw ConfigError("interval needs 0 < a < b, got '" + std::string(text) + "'");
  return {a, b};
}

void apply_config(Experiment& exp, const ConfigMap& config, const std::vector<std::string>& ignored) {
  for (const auto& [key, entry] : config) {
    if (std::find(ignored.begin(), ignored.end(), key) != ignored.end()) continue;
    const std::string& v = entry.value;
    try {
      if (key == "function") {
        exp.function = v;
      } else if (key == "kernel") {
        exp.kernel = parse_activation_kind(v);
      } else if (key == "n") {
        exp.n_list = parse_int_list(v);
      } else if (key == "interval") {
        std::tie(exp.a, exp.b) = parse_interval(v);
      } else if (key == "grid") {
        exp.eval_grid_points = to_int(v, "grid");
      } else if (key == "operators") {
        exp.operators.clear();
        for (const auto& op : split_list(v)) exp.operators.push_back(parse_operator_kind(op));
      } else if (key == "range_policy") {
        exp.range_policy = parse_range_policy(v);
      } else if (key == "extension") {
        exp.extension = parse_extension(v);
      } else if (key == "quadrature") {
        exp.quadrature.rule = parse_quadrature_rule(v);
      } else if (key == "quadrature_points") {
        exp.quadrature.points = to_int(v, "quadrature_points");
      } else if (key == "measure") {
        exp.measure = parse_measure(v);
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } catch (const Error& e) {
      fail_at(entry.line, e.what());
    }
  }
}

}  // namespace mmexp
