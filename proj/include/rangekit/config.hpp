#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rangekit {

// Minimal TOML-style config: [section] headers, key = value lines, '#'
// comments. Values are strings ("..."), numbers, booleans, or flat arrays
// of numbers ([1, 2.5]). That subset covers every config surface in this
// project; nested tables are deliberately unsupported.
struct ConfigValue {
  enum class Kind { string, number, boolean, number_list };
  Kind kind = Kind::string;
  std::string str;
  double num = 0.0;
  bool flag = false;
  std::vector<double> list;
};

class Config {
public:
  static Config parse(std::string_view text);
  static Config parse_file(const std::filesystem::path& path);

  bool has(const std::string& section, const std::string& key) const;

  // Typed getters; the non-defaulted forms throw ConfigError when the key is
  // missing or has the wrong kind.
  double get_number(const std::string& section, const std::string& key) const;
  double get_number(const std::string& section, const std::string& key,
                    double fallback) const;
  std::string get_string(const std::string& section,
                         const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;
  bool get_bool(const std::string& section, const std::string& key,
                bool fallback) const;
  std::vector<double> get_numbers(const std::string& section,
                                  const std::string& key) const;
  std::vector<double> get_numbers(const std::string& section,
                                  const std::string& key,
                                  const std::vector<double>& fallback) const;

  void set_number(const std::string& section, const std::string& key,
                  double value);
  void set_string(const std::string& section, const std::string& key,
                  const std::string& value);
  void set_bool(const std::string& section, const std::string& key,
                bool value);
  void set_numbers(const std::string& section, const std::string& key,
                   const std::vector<double>& values);

  // Keys of one section, sorted.
  std::vector<std::string> keys(const std::string& section) const;

  // Canonical text form: sections and keys sorted, numbers printed with
  // round-trip precision. Equal configs serialize to equal bytes, which is
  // what the manifest hash relies on.
  std::string serialize() const;

private:
  const ConfigValue* find(const std::string& section,
                          const std::string& key) const;
  std::map<std::string, std::map<std::string, ConfigValue>> sections_;
};

// FNV-1a 64-bit over bytes; hex digest helper for manifests.
std::uint64_t fnv1a64(std::string_view bytes);
std::string to_hex(std::uint64_t value);

} // namespace rangekit
