#include "enls_lab/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>

#include "enls/errors.hpp"

extern char** environ;

namespace enls::lab {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& s, double& out) {
  const std::string t = trim(s);
  const char* end = t.data() + t.size();
  auto [p, ec] = std::from_chars(t.data(), end, out);
  return ec == std::errc() && p == end && !t.empty();
}

// Section and key names are case-insensitive; the tree stores them lowercased.
boost::property_tree::ptree lowered(const boost::property_tree::ptree& in) {
  boost::property_tree::ptree out;
  for (const auto& [section, body] : in) {
    if (body.empty()) {
      out.put(boost::property_tree::ptree::path_type(lower(section), '/'), body.data());
      continue;
    }
    for (const auto& [key, value] : body) {
      out.put(boost::property_tree::ptree::path_type(lower(section) + "/" + lower(key), '/'),
              value.data());
    }
  }
  return out;
}

std::string field(const std::string& section, const std::string& key) {
  return "[" + section + "] " + key;
}

ConfigError parse_error(const std::string& origin,
                        const boost::property_tree::ini_parser_error& e) {
  if (e.line() == 0) return ConfigError(origin + ": " + e.message());
  return ConfigError(origin + ":" + std::to_string(e.line()) + ": " + e.message());
}

}  // namespace

Config Config::from_string(const std::string& text, const std::string& origin) {
  Config c;
  c.origin_ = origin;
  std::istringstream in(text);
  try {
    boost::property_tree::ini_parser::read_ini(in, c.tree_);
    c.tree_ = lowered(c.tree_);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw parse_error(origin, e);
  }
  return c;
}

Config Config::load(const std::filesystem::path& path) {
  Config c;
  c.origin_ = path.string();
  try {
    boost::property_tree::ini_parser::read_ini(path.string(), c.tree_);
    c.tree_ = lowered(c.tree_);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw parse_error(path.string(), e);
  }
  return c;
}

void Config::set(const std::string& section, const std::string& key, const std::string& value) {
  tree_.put(boost::property_tree::ptree::path_type(lower(section) + "/" + lower(key), '/'), value);
}

void Config::apply_environment() {
  const std::string prefix = kEnvPrefix;
  for (char** e = environ; e && *e; ++e) {
    const std::string entry = *e;
    if (entry.rfind(prefix, 0) != 0) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos) continue;
    const std::string name = lower(entry.substr(prefix.size(), eq - prefix.size()));
    const auto sep = name.find('_');
    if (sep == std::string::npos || sep == 0 || sep + 1 == name.size()) continue;
    set(name.substr(0, sep), name.substr(sep + 1), entry.substr(eq + 1));
  }
}

std::optional<std::string> Config::raw(const std::string& section, const std::string& key) const {
  const auto v =
      tree_.get_optional<std::string>(boost::property_tree::ptree::path_type(lower(section) + "/" + lower(key), '/'));
  if (!v) return std::nullopt;
  return trim(*v);
}

bool Config::has(const std::string& section, const std::string& key) const {
  return raw(section, key).has_value();
}

std::string Config::required(const std::string& section, const std::string& key) const {
  const auto v = raw(section, key);
  if (!v) throw ConfigError(origin_ + ": missing required field " + field(section, key));
  return *v;
}

void Config::bad_value(const std::string& section, const std::string& key,
                       const std::string& value, const char* expected) const {
  throw ConfigError(origin_ + ": field " + field(section, key) + ": cannot parse '" + value +
                    "' as " + expected);
}

double Config::number(const std::string& section, const std::string& key) const {
  const std::string v = required(section, key);
  double out = 0;
  if (!parse_double(v, out)) bad_value(section, key, v, "a number");
  resolved_[section][key] = out;
  return out;
}

double Config::number(const std::string& section, const std::string& key, double fallback) const {
  if (!has(section, key)) {
    resolved_[section][key] = fallback;
    return fallback;
  }
  return number(section, key);
}

long Config::integer(const std::string& section, const std::string& key) const {
  const std::string v = required(section, key);
  long out = 0;
  const char* end = v.data() + v.size();
  auto [p, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || p != end || v.empty()) bad_value(section, key, v, "an integer");
  resolved_[section][key] = out;
  return out;
}

long Config::integer(const std::string& section, const std::string& key, long fallback) const {
  if (!has(section, key)) {
    resolved_[section][key] = fallback;
    return fallback;
  }
  return integer(section, key);
}

bool Config::boolean(const std::string& section, const std::string& key, bool fallback) const {
  bool out = fallback;
  if (const auto v = raw(section, key)) {
    const std::string t = lower(*v);
    if (t == "true" || t == "1" || t == "yes" || t == "on") {
      out = true;
    } else if (t == "false" || t == "0" || t == "no" || t == "off") {
      out = false;
    } else {
      bad_value(section, key, *v, "a boolean");
    }
  }
  resolved_[section][key] = out;
  return out;
}

std::string Config::text(const std::string& section, const std::string& key) const {
  const std::string v = required(section, key);
  resolved_[section][key] = v;
  return v;
}

std::string Config::text(const std::string& section, const std::string& key,
                         const std::string& fallback) const {
  const std::string v = raw(section, key).value_or(fallback);
  resolved_[section][key] = v;
  return v;
}

std::vector<double> Config::numbers(const std::string& section, const std::string& key,
                                    const std::vector<double>& fallback) const {
  std::vector<double> out = fallback;
  if (const auto v = raw(section, key)) {
    out.clear();
    std::stringstream in(*v);
    std::string item;
    while (std::getline(in, item, ',')) {
      double x = 0;
      if (!parse_double(item, x)) bad_value(section, key, *v, "a comma-separated list of numbers");
      out.push_back(x);
    }
  }
  resolved_[section][key] = out;
  return out;
}

}  // namespace enls::lab
