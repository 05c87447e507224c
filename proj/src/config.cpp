#include "pants/config.hpp"

#include <cstdlib>
#include <fstream>

#include "pants/errors.hpp"

namespace pants {

void Config::validate() const {
  if (max_n < 0 || net_enum_max_n < 0 || lattice_max_n < 0 || piece_poset_max_n < 0)
    throw argument_error("size guards must be nonnegative");
  if (snf_nonzero_guard == 0) throw argument_error("snf_nonzero_guard must be positive");
  if (collapse_retries < 0) throw argument_error("collapse_retries must be nonnegative");
  if (output_format != "json" && output_format != "dot" && output_format != "text")
    throw argument_error("output_format must be json, dot, or text");
}

static std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

static long long parse_ll(const std::string& where, const std::string& value) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(value, &used);
    if (used != value.size()) throw argument_error(where + ": bad integer '" + value + "'");
    return v;
  } catch (const argument_error&) {
    throw;
  } catch (const std::exception&) {
    throw argument_error(where + ": bad integer '" + value + "'");
  }
}

Config Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw argument_error("cannot open config file '" + path + "'");
  Config cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    std::string where = path + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw argument_error(where + ": expected key=value");
    std::string key = trim(t.substr(0, eq)), value = trim(t.substr(eq + 1));
    if (key == "max_n") cfg.max_n = static_cast<int>(parse_ll(where, value));
    else if (key == "net_enum_max_n") cfg.net_enum_max_n = static_cast<int>(parse_ll(where, value));
    else if (key == "lattice_max_n") cfg.lattice_max_n = static_cast<int>(parse_ll(where, value));
    else if (key == "piece_poset_max_n") cfg.piece_poset_max_n = static_cast<int>(parse_ll(where, value));
    else if (key == "snf_nonzero_guard") cfg.snf_nonzero_guard = static_cast<std::size_t>(parse_ll(where, value));
    else if (key == "collapse_retries") cfg.collapse_retries = static_cast<int>(parse_ll(where, value));
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_ll(where, value));
    else if (key == "output_format") cfg.output_format = value;
    else throw argument_error(where + ": unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

Config Config::from_env() {
  const char* path = std::getenv("PANTS_CONFIG");
  if (path && *path) return load_file(path);
  return Config();
}

}  // namespace pants
