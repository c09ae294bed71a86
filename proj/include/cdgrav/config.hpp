#ifndef CDGRAV_CONFIG_HPP_
#define CDGRAV_CONFIG_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdgrav {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Flat `section.key = value` configuration with command-line overrides.
// Lines starting with '#' and blank lines are ignored.
class Config {
 public:
  static Config from_file(const std::string& path);
  void set(const std::string& key, const std::string& value);
  void apply_override(const std::string& key_equals_value);

  bool has(const std::string& key) const;
  std::string get(const std::string& key, const std::string& dflt) const;
  double get_double(const std::string& key, double dflt) const;
  long get_long(const std::string& key, long dflt) const;
  bool get_bool(const std::string& key, bool dflt) const;
  std::vector<double> get_list(const std::string& key) const;

  // Keys never read back are configuration mistakes.
  void check_consumed() const;

 private:
  std::map<std::string, std::string> kv_;
  mutable std::map<std::string, bool> consumed_;
};

}  // namespace cdgrav

#endif
