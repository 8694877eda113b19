#include "gssf/harness/config.hpp"

#include <charconv>
#include <fstream>

namespace gssf {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(const std::string& v, const std::string& where) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw ConfigError(where + ": bad number '" + v + "'");
  return out;
}

Interval parse_interval(const std::string& v, const std::string& where) {
  const auto comma = v.find(',');
  if (comma == std::string::npos) throw ConfigError(where + ": expected lo,hi");
  const Interval iv{parse_number<double>(trim(v.substr(0, comma)), where),
                    parse_number<double>(trim(v.substr(comma + 1)), where)};
  if (!(iv.first < iv.second)) throw ConfigError(where + ": empty interval");
  return iv;
}

double positive(double v, const std::string& where) {
  if (!(v > 0)) throw ConfigError(where + ": must be positive");
  return v;
}

}  // namespace

void apply_config(std::istream& in, Scenario& s) {
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::string where = "config line " + std::to_string(no);
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key=value");
    const std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
    if (key == "samples") {
      s.samples = parse_number<int>(val, where);
      if (s.samples < 1) throw ConfigError(where + ": samples must be at least 1");
    } else if (key == "seed") {
      s.seed = parse_number<std::uint64_t>(val, where);
    } else if (key == "L1") {
      s.L1 = parse_number<double>(val, where);
    } else if (key == "tol.forward") {
      s.forward_tol = positive(parse_number<double>(val, where), where);
    } else if (key == "tol.identity") {
      s.identity_tol = positive(parse_number<double>(val, where), where);
    } else if (key == "tol.validate") {
      s.validate_tol = positive(parse_number<double>(val, where), where);
    } else if (key == "box.space") {
      s.space_box = parse_interval(val, where);
    } else if (key == "box.embedding") {
      s.embedding_box = parse_interval(val, where);
    } else {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
}

void apply_config_file(const std::string& path, Scenario& s) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  apply_config(in, s);
}

}  // namespace gssf
