#include "cdgrav/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace cdgrav {

namespace {
std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}
}  // namespace

Config Config::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  Config cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected key = value");
    cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return cfg;
}

void Config::set(const std::string& key, const std::string& value) {
  if (key.empty()) throw ConfigError("empty config key");
  kv_[key] = value;
}

void Config::apply_override(const std::string& kev) {
  size_t eq = kev.find('=');
  if (eq == std::string::npos)
    throw ConfigError("override must be key=value: " + kev);
  set(trim(kev.substr(0, eq)), trim(kev.substr(eq + 1)));
}

bool Config::has(const std::string& key) const {
  return kv_.count(key) != 0;
}

std::string Config::get(const std::string& key, const std::string& dflt) const {
  auto it = kv_.find(key);
  consumed_[key] = true;
  return it == kv_.end() ? dflt : it->second;
}

double Config::get_double(const std::string& key, double dflt) const {
  auto it = kv_.find(key);
  consumed_[key] = true;
  if (it == kv_.end()) return dflt;
  try {
    size_t pos = 0;
    double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ConfigError("bad number for " + key + ": " + it->second);
  }
}

long Config::get_long(const std::string& key, long dflt) const {
  auto it = kv_.find(key);
  consumed_[key] = true;
  if (it == kv_.end()) return dflt;
  try {
    size_t pos = 0;
    long v = std::stol(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ConfigError("bad integer for " + key + ": " + it->second);
  }
}

bool Config::get_bool(const std::string& key, bool dflt) const {
  auto it = kv_.find(key);
  consumed_[key] = true;
  if (it == kv_.end()) return dflt;
  std::string v = it->second;
  std::transform(v.begin(), v.end(), v.begin(), ::tolower);
  if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
  if (v == "off" || v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("bad switch for " + key + ": " + it->second);
}

std::vector<double> Config::get_list(const std::string& key) const {
  auto it = kv_.find(key);
  consumed_[key] = true;
  std::vector<double> out;
  if (it == kv_.end()) return out;
  std::stringstream ss(it->second);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (...) {
      throw ConfigError("bad list entry for " + key + ": " + item);
    }
  }
  return out;
}

void Config::check_consumed() const {
  for (const auto& [k, v] : kv_)
    if (!consumed_.count(k)) throw ConfigError("unknown config key: " + k);
}

}  // namespace cdgrav
