#include "tanaka/config.hpp"

#include <cctype>
#include <json.hpp>
#include <set>

#include "tanaka/errors.hpp"

namespace tanaka {

namespace {

const std::set<std::string> kCommands = {"hall", "universal", "symbol", "prolong", "verify"};

long parse_int(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("malformed integer for key '" + key + "': '" + value + "'");
  }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  size_t pos = 0;
  const size_t len = text.size();
  auto skip_ws = [&] {
    while (pos < len) {
      if (isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      } else if (text[pos] == '#') {  // comment to end of line
        while (pos < len && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  };

  while (skip_ws(), pos < len) {
    size_t key_start = pos;
    while (pos < len && (isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    std::string key = text.substr(key_start, pos - key_start);
    skip_ws();
    if (key.empty() || pos >= len || text[pos] != '=')
      throw ConfigError("expected key=value at position " + std::to_string(key_start));
    ++pos;  // '='
    skip_ws();

    std::string value;
    if (pos < len && text[pos] == '[') {
      // bracketed list, quotes respected
      int level = 0;
      bool in_string = false;
      size_t start = pos;
      for (; pos < len; ++pos) {
        char c = text[pos];
        if (in_string) {
          if (c == '\\')
            ++pos;
          else if (c == '"')
            in_string = false;
        } else if (c == '"') {
          in_string = true;
        } else if (c == '[') {
          ++level;
        } else if (c == ']') {
          --level;
          if (level == 0) {
            ++pos;
            break;
          }
        }
      }
      if (level != 0) throw ConfigError("unterminated list for key '" + key + "'");
      value = text.substr(start, pos - start);
    } else {
      size_t start = pos;
      while (pos < len && !isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      value = text.substr(start, pos - start);
    }

    if (key == "command") {
      if (!kCommands.count(value)) throw ConfigError("unknown command '" + value + "'");
      cfg.command = value;
    } else if (key == "n") {
      cfg.n = static_cast<int>(parse_int(key, value));
    } else if (key == "mu") {
      cfg.mu = static_cast<int>(parse_int(key, value));
    } else if (key == "generators") {
      cfg.generators = static_cast<int>(parse_int(key, value));
    } else if (key == "depth") {
      cfg.depth = static_cast<int>(parse_int(key, value));
    } else if (key == "max_level") {
      cfg.max_level = static_cast<int>(parse_int(key, value));
    } else if (key == "jobs") {
      cfg.jobs = static_cast<int>(parse_int(key, value));
    } else if (key == "basis_cap") {
      cfg.basis_cap = static_cast<std::size_t>(parse_int(key, value));
    } else if (key == "emit_bases") {
      if (value == "true")
        cfg.emit_bases = true;
      else if (value == "false")
        cfg.emit_bases = false;
      else
        throw ConfigError("malformed boolean for key 'emit_bases': '" + value + "'");
    } else if (key == "output") {
      cfg.output = value;
    } else if (key == "ideal") {
      try {
        nlohmann::json arr = nlohmann::json::parse(value);
        if (!arr.is_array()) throw ConfigError("ideal must be a list");
        cfg.ideal.clear();
        for (const auto& item : arr) {
          if (!item.is_string()) throw ConfigError("ideal entries must be strings");
          cfg.ideal.push_back(item.get<std::string>());
        }
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed ideal list: ") + e.what());
      }
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }

  if (cfg.n < 1) throw ConfigError("n out of range");
  if (cfg.mu < 2) throw ConfigError("mu out of range");
  if (cfg.generators < 1) throw ConfigError("generators out of range");
  if (cfg.depth < 1) throw ConfigError("depth out of range");
  if (cfg.max_level < 1) throw ConfigError("max_level out of range");
  if (cfg.jobs < 1) throw ConfigError("jobs out of range");
  return cfg;
}

std::string emit_config(const RunConfig& c) {
  nlohmann::json ideal = nlohmann::json::array();
  for (const auto& s : c.ideal) ideal.push_back(s);
  std::string out;
  out += "command=" + c.command + "\n";
  out += "n=" + std::to_string(c.n) + "\n";
  out += "mu=" + std::to_string(c.mu) + "\n";
  out += "generators=" + std::to_string(c.generators) + "\n";
  out += "depth=" + std::to_string(c.depth) + "\n";
  out += "ideal=" + ideal.dump() + "\n";
  out += "max_level=" + std::to_string(c.max_level) + "\n";
  out += "basis_cap=" + std::to_string(c.basis_cap) + "\n";
  out += "emit_bases=" + std::string(c.emit_bases ? "true" : "false") + "\n";
  out += "output=" + c.output + "\n";
  out += "jobs=" + std::to_string(c.jobs) + "\n";
  return out;
}

}  // namespace tanaka
