#include "rangekit/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rangekit/error.hpp"

namespace rangekit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Strips a trailing comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (c == '"') in_string = !in_string;
    if (c == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

double parse_number(std::string_view text, const std::string& context) {
  std::string buf(text);
  try {
    std::size_t pos = 0;
    double v = std::stod(buf, &pos);
    if (pos != buf.size())
      throw ConfigError("trailing characters in number '" + buf + "' at " +
                        context);
    return v;
  } catch (const std::invalid_argument&) {
    throw ConfigError("expected a number, got '" + buf + "' at " + context);
  } catch (const std::out_of_range&) {
    throw ConfigError("number out of range: '" + buf + "' at " + context);
  }
}

ConfigValue parse_value(std::string_view text, const std::string& context) {
  ConfigValue v;
  text = trim(text);
  if (text.empty()) throw ConfigError("empty value at " + context);
  if (text.front() == '"') {
    if (text.size() < 2 || text.back() != '"')
      throw ConfigError("unterminated string at " + context);
    v.kind = ConfigValue::Kind::string;
    v.str = std::string(text.substr(1, text.size() - 2));
    return v;
  }
  if (text == "true" || text == "false") {
    v.kind = ConfigValue::Kind::boolean;
    v.flag = (text == "true");
    return v;
  }
  if (text.front() == '[') {
    if (text.back() != ']')
      throw ConfigError("unterminated array at " + context);
    v.kind = ConfigValue::Kind::number_list;
    std::string_view body = trim(text.substr(1, text.size() - 2));
    while (!body.empty()) {
      std::size_t comma = body.find(',');
      std::string_view item =
          comma == std::string_view::npos ? body : body.substr(0, comma);
      v.list.push_back(parse_number(trim(item), context));
      if (comma == std::string_view::npos) break;
      body = trim(body.substr(comma + 1));
      if (body.empty())
        throw ConfigError("trailing comma in array at " + context);
    }
    return v;
  }
  v.kind = ConfigValue::Kind::number;
  v.num = parse_number(text, context);
  return v;
}

std::string format_number(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    std::ostringstream out;
    out << static_cast<long long>(v);
    return out.str();
  }
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

} // namespace

Config Config::parse(std::string_view text) {
  Config cfg;
  std::string section;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    line = trim(strip_comment(line));
    if (line.empty()) continue;

    std::string context = "line " + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("malformed section header at " + context);
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section.empty())
        throw ConfigError("empty section name at " + context);
      cfg.sections_[section];
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("expected 'key = value' at " + context);
    std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw ConfigError("empty key at " + context);
    cfg.sections_[section][key] = parse_value(line.substr(eq + 1), context);
  }
  return cfg;
}

Config Config::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const ConfigValue* Config::find(const std::string& section,
                                const std::string& key) const {
  auto sit = sections_.find(section);
  if (sit == sections_.end()) return nullptr;
  auto kit = sit->second.find(key);
  return kit == sit->second.end() ? nullptr : &kit->second;
}

bool Config::has(const std::string& section, const std::string& key) const {
  return find(section, key) != nullptr;
}

double Config::get_number(const std::string& section,
                          const std::string& key) const {
  const ConfigValue* v = find(section, key);
  if (!v)
    throw ConfigError("missing config key [" + section + "] " + key);
  if (v->kind != ConfigValue::Kind::number)
    throw ConfigError("config key [" + section + "] " + key +
                      " is not a number");
  return v->num;
}

double Config::get_number(const std::string& section, const std::string& key,
                          double fallback) const {
  return has(section, key) ? get_number(section, key) : fallback;
}

std::string Config::get_string(const std::string& section,
                               const std::string& key) const {
  const ConfigValue* v = find(section, key);
  if (!v)
    throw ConfigError("missing config key [" + section + "] " + key);
  if (v->kind != ConfigValue::Kind::string)
    throw ConfigError("config key [" + section + "] " + key +
                      " is not a string");
  return v->str;
}

std::string Config::get_string(const std::string& section,
                               const std::string& key,
                               const std::string& fallback) const {
  return has(section, key) ? get_string(section, key) : fallback;
}

bool Config::get_bool(const std::string& section, const std::string& key,
                      bool fallback) const {
  const ConfigValue* v = find(section, key);
  if (!v) return fallback;
  if (v->kind != ConfigValue::Kind::boolean)
    throw ConfigError("config key [" + section + "] " + key +
                      " is not a boolean");
  return v->flag;
}

std::vector<double> Config::get_numbers(const std::string& section,
                                        const std::string& key) const {
  const ConfigValue* v = find(section, key);
  if (!v)
    throw ConfigError("missing config key [" + section + "] " + key);
  if (v->kind == ConfigValue::Kind::number) return {v->num};
  if (v->kind != ConfigValue::Kind::number_list)
    throw ConfigError("config key [" + section + "] " + key +
                      " is not a number array");
  return v->list;
}

std::vector<double> Config::get_numbers(
    const std::string& section, const std::string& key,
    const std::vector<double>& fallback) const {
  return has(section, key) ? get_numbers(section, key) : fallback;
}

void Config::set_number(const std::string& section, const std::string& key,
                        double value) {
  ConfigValue v;
  v.kind = ConfigValue::Kind::number;
  v.num = value;
  sections_[section][key] = v;
}

void Config::set_string(const std::string& section, const std::string& key,
                        const std::string& value) {
  ConfigValue v;
  v.kind = ConfigValue::Kind::string;
  v.str = value;
  sections_[section][key] = v;
}

void Config::set_bool(const std::string& section, const std::string& key,
                      bool value) {
  ConfigValue v;
  v.kind = ConfigValue::Kind::boolean;
  v.flag = value;
  sections_[section][key] = v;
}

void Config::set_numbers(const std::string& section, const std::string& key,
                         const std::vector<double>& values) {
  ConfigValue v;
  v.kind = ConfigValue::Kind::number_list;
  v.list = values;
  sections_[section][key] = v;
}

std::vector<std::string> Config::keys(const std::string& section) const {
  std::vector<std::string> out;
  auto sit = sections_.find(section);
  if (sit == sections_.end()) return out;
  for (const auto& [k, _] : sit->second) out.push_back(k);
  return out;
}

std::string Config::serialize() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [section, entries] : sections_) {
    if (!first) out << "\n";
    first = false;
    out << "[" << section << "]\n";
    for (const auto& [key, v] : entries) {
      out << key << " = ";
      switch (v.kind) {
        case ConfigValue::Kind::string:
          out << '"' << v.str << '"';
          break;
        case ConfigValue::Kind::number:
          out << format_number(v.num);
          break;
        case ConfigValue::Kind::boolean:
          out << (v.flag ? "true" : "false");
          break;
        case ConfigValue::Kind::number_list: {
          out << '[';
          for (std::size_t i = 0; i < v.list.size(); ++i) {
            if (i) out << ", ";
            out << format_number(v.list[i]);
          }
          out << ']';
          break;
        }
      }
      out << "\n";
    }
  }
  return out.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string to_hex(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

} // namespace rangekit
