#ifndef TANAKA_CONFIG_HPP
#define TANAKA_CONFIG_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace tanaka {

struct RunConfig {
  std::string command = "verify";  // hall | universal | symbol | prolong | verify
  int n = 1;
  int mu = 4;
  int generators = 2;  // hall command only
  int depth = 3;       // hall command only
  std::vector<std::string> ideal;
  int max_level = 4;
  std::size_t basis_cap = 20000;
  bool emit_bases = false;
  std::string output = "-";
  int jobs = 1;

  bool operator==(const RunConfig&) const = default;
};

// Parses whitespace/newline separated key=value pairs; ideal values are a
// JSON-style string array. Unknown keys, malformed values and out-of-range
// n/mu raise ConfigError with the offending key.
RunConfig parse_config(const std::string& text);

// Canonical text form; parse_config(emit_config(c)) == c.
std::string emit_config(const RunConfig& c);

}  // namespace tanaka

#endif
